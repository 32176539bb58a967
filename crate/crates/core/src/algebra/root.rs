use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Arithmetic mode for level-k evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(format!("unknown mode `{other}` (expected exact|float)")),
        }
    }
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Level-k specialization `A = exp(i pi / 2r)`, `r = k + 2`.
#[derive(Debug, Clone)]
pub struct RootContext {
    level: u32,
    mode: Mode,
    tolerance: f64,
    field: Arc<CyclotomicField>,
}

impl RootContext {
    pub fn new(level: u32, mode: Mode) -> Self {
        let order = 4 * (level + 2);
        Self { level, mode, tolerance: DEFAULT_TOLERANCE, field: Arc::new(CyclotomicField::new(order)) }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        assert!(tolerance >= 0.0);
        self.tolerance = tolerance;
        self
    }

    /// Same level, other arithmetic mode.
    pub fn with_mode(&self, mode: Mode) -> Self {
        Self { mode, ..self.clone() }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// `r = k + 2`.
    pub fn rank(&self) -> u32 {
        self.level + 2
    }

    /// `4r`, the multiplicative order of `A`.
    pub fn order(&self) -> u32 {
        4 * self.rank()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn a(&self) -> Complex64 {
        self.field.zeta()
    }

    pub fn from_int(&self, c: i64) -> RootScalar {
        match self.mode {
            Mode::Exact => RootScalar::Exact(Cyclotomic::from_int(&self.field, c)),
            Mode::Float => RootScalar::Float(Complex64::new(c as f64, 0.0)),
        }
    }

    pub fn one(&self) -> RootScalar {
        self.from_int(1)
    }

    pub fn zero(&self) -> RootScalar {
        self.from_int(0)
    }

    /// `p(A)` at the root; canonical reduced form in exact mode.
    pub fn eval(&self, p: &LaurentPoly) -> RootScalar {
        match self.mode {
            Mode::Exact => {
                let Some(lo) = p.min_exp() else {
                    return self.zero();
                };
                let hi = p.max_exp().unwrap();
                let coeffs: Vec<i128> = (lo..=hi).map(|e| p.coeff(e)).collect();
                RootScalar::Exact(Cyclotomic::from_exponent_coeffs(&self.field, &coeffs, lo))
            }
            Mode::Float => RootScalar::Float(self.eval_complex(p)),
        }
    }

    fn eval_complex(&self, p: &LaurentPoly) -> Complex64 {
        let order = self.order() as i64;
        let step = std::f64::consts::PI * 2.0 / order as f64;
        p.terms()
            .map(|(e, c)| Complex64::from_polar(c as f64, step * e.rem_euclid(order) as f64))
            .sum()
    }

    /// `[m]` at the root, equal to `sin(m pi / r) / sin(pi / r)`.
    pub fn quantum_integer(&self, m: u32) -> RootScalar {
        self.eval(&LaurentPoly::quantum_integer(m))
    }
}

/// A value at the level-k root of unity.
#[derive(Clone, PartialEq)]
pub enum RootScalar {
    Exact(Cyclotomic),
    Float(Complex64),
}

impl RootScalar {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            RootScalar::Exact(c) => c.to_complex(),
            RootScalar::Float(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RootScalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Cyclotomic> {
        match self {
            RootScalar::Exact(c) => Some(c),
            RootScalar::Float(_) => None,
        }
    }

    /// Exactly zero (exact mode), or bitwise zero (float mode).
    pub fn is_zero(&self) -> bool {
        match self {
            RootScalar::Exact(c) => c.is_zero(),
            RootScalar::Float(z) => z.is_zero(),
        }
    }

    /// Zero in exact mode, or of modulus at most `tol` in float mode.
    pub fn is_negligible(&self, tol: f64) -> bool {
        match self {
            RootScalar::Exact(c) => c.is_zero(),
            RootScalar::Float(z) => z.norm() <= tol,
        }
    }

    pub fn to_float(&self) -> RootScalar {
        RootScalar::Float(self.to_complex())
    }

    /// Exact equality when both sides are exact, else `|x - y| <= tol`.
    pub fn approx_eq(&self, other: &RootScalar, tol: f64) -> bool {
        match (self, other) {
            (RootScalar::Exact(a), RootScalar::Exact(b)) => a == b,
            _ => (self.to_complex() - other.to_complex()).norm() <= tol,
        }
    }

    pub fn checked_div(&self, other: &RootScalar) -> Option<RootScalar> {
        match (self, other) {
            (RootScalar::Exact(a), RootScalar::Exact(b)) => a.div(b).map(RootScalar::Exact),
            _ => {
                let d = other.to_complex();
                (!d.is_zero()).then(|| RootScalar::Float(self.to_complex() / d))
            }
        }
    }

    pub fn inverse(&self) -> Option<RootScalar> {
        match self {
            RootScalar::Exact(a) => a.inverse().map(RootScalar::Exact),
            RootScalar::Float(z) => (!z.is_zero()).then(|| RootScalar::Float(z.inv())),
        }
    }

    pub fn powi(&self, e: i64) -> Option<RootScalar> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let n = e.unsigned_abs();
        Some(match base {
            RootScalar::Exact(c) => RootScalar::Exact(c.pow(n)),
            RootScalar::Float(z) => RootScalar::Float(z.powi(n as i32)),
        })
    }
}

fn binop(
    x: &RootScalar,
    y: &RootScalar,
    exact: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    float: impl Fn(Complex64, Complex64) -> Complex64,
) -> RootScalar {
    match (x, y) {
        (RootScalar::Exact(a), RootScalar::Exact(b)) => RootScalar::Exact(exact(a, b)),
        _ => RootScalar::Float(float(x.to_complex(), y.to_complex())),
    }
}

impl Add for &RootScalar {
    type Output = RootScalar;
    fn add(self, rhs: &RootScalar) -> RootScalar {
        binop(self, rhs, Cyclotomic::add, |a, b| a + b)
    }
}

impl Sub for &RootScalar {
    type Output = RootScalar;
    fn sub(self, rhs: &RootScalar) -> RootScalar {
        binop(self, rhs, Cyclotomic::sub, |a, b| a - b)
    }
}

impl Mul for &RootScalar {
    type Output = RootScalar;
    fn mul(self, rhs: &RootScalar) -> RootScalar {
        binop(self, rhs, Cyclotomic::mul, |a, b| a * b)
    }
}

impl Neg for &RootScalar {
    type Output = RootScalar;
    fn neg(self) -> RootScalar {
        match self {
            RootScalar::Exact(c) => RootScalar::Exact(c.neg()),
            RootScalar::Float(z) => RootScalar::Float(-z),
        }
    }
}

/// Fixed-point rendering with 12 decimals, `-0` folded to `0`.
fn fixed(x: f64) -> String {
    let s = format!("{:.12}", x);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Complex text form `re<+|->im*i`.
pub fn format_complex(z: Complex64) -> String {
    let re = fixed(z.re);
    let im = fixed(z.im);
    match im.strip_prefix('-') {
        Some(abs) => format!("{re}-{abs}*i"),
        None => format!("{re}+{im}*i"),
    }
}

impl fmt::Display for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_complex(self.to_complex()))
    }
}

impl fmt::Debug for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootScalar::Exact(c) => write!(f, "Exact({c} ~ {})", format_complex(c.to_complex())),
            RootScalar::Float(z) => write!(f, "Float({})", format_complex(*z)),
        }
    }
}

/// `x^e` for integer or half-integer `e`.
///
/// Half-integer powers use the principal square root. In exact mode the root
/// must exist in the cyclotomic field, otherwise `InexactHalfPower`.
pub fn scalar_power(x: &RootScalar, e: Ratio<i64>, ctx: &RootContext) -> Result<RootScalar> {
    let shadow;
    let x = match ctx.mode() {
        Mode::Float => {
            shadow = x.to_float();
            &shadow
        }
        Mode::Exact => x,
    };
    let den = *e.denom();
    if den != 1 && den != 2 {
        return Err(Error::InvalidExponent(e.to_string()));
    }
    if x.is_zero() {
        return match e.numer().signum() {
            -1 => Err(Error::ZeroToNegativePower),
            0 => Ok(one_like(x)),
            _ => Ok(x.clone()),
        };
    }
    if den == 1 {
        return x.powi(*e.numer()).ok_or(Error::ZeroToNegativePower);
    }
    let root = match x {
        RootScalar::Exact(c) => RootScalar::Exact(c.sqrt().ok_or(Error::InexactHalfPower)?),
        RootScalar::Float(z) => RootScalar::Float(z.sqrt()),
    };
    root.powi(*e.numer()).ok_or(Error::ZeroToNegativePower)
}

fn one_like(x: &RootScalar) -> RootScalar {
    match x {
        RootScalar::Exact(c) => RootScalar::Exact(Cyclotomic::from_int(c.field(), 1)),
        RootScalar::Float(_) => RootScalar::Float(Complex64::new(1.0, 0.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sin_ratio(m: u32, r: u32) -> f64 {
        let pi = std::f64::consts::PI;
        (m as f64 * pi / r as f64).sin() / (pi / r as f64).sin()
    }

    #[test]
    fn eval_examples() {
        let ctx = RootContext::new(1, Mode::Exact);
        assert_eq!(ctx.eval(&LaurentPoly::one()), ctx.one());
        assert_eq!(ctx.eval(&LaurentPoly::monomial(1, 4 * 3)), ctx.one());
        // -A^2 - A^-2 at r = 3 is -2cos(pi/3) = -1
        assert_eq!(ctx.eval(&LaurentPoly::delta()), ctx.from_int(-1));
        let f = RootContext::new(1, Mode::Float);
        assert!((f.eval(&LaurentPoly::delta()).to_complex() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quantum_integer_examples() {
        for k in 0..6 {
            let ctx = RootContext::new(k, Mode::Exact);
            let r = ctx.rank();
            assert_eq!(ctx.quantum_integer(1), ctx.one());
            assert!(ctx.quantum_integer(r).is_zero());
            for m in 0..=r {
                let v = ctx.quantum_integer(m).to_complex();
                assert!((v - Complex64::new(sin_ratio(m, r), 0.0)).norm() < 1e-10);
            }
        }
        let q = RootContext::new(2, Mode::Float).quantum_integer(2).to_complex();
        assert!((q.re - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn quantum_integer_reflection() {
        for k in 0..=10 {
            let ctx = RootContext::new(k, Mode::Exact);
            let r = ctx.rank();
            for m in 0..=r {
                assert_eq!(ctx.quantum_integer(m), ctx.quantum_integer(r - m), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn powers() {
        let ctx = RootContext::new(2, Mode::Exact);
        let half = Ratio::new(1, 2);
        assert_eq!(scalar_power(&ctx.one(), half, &ctx).unwrap(), ctx.one());
        assert_eq!(scalar_power(&ctx.from_int(4), half, &ctx).unwrap(), ctx.from_int(2));
        assert_eq!(scalar_power(&ctx.from_int(2), Ratio::from_integer(3), &ctx).unwrap(), ctx.from_int(8));
        assert_eq!(scalar_power(&ctx.zero(), Ratio::from_integer(-1), &ctx), Err(Error::ZeroToNegativePower));
        assert!(matches!(scalar_power(&ctx.one(), Ratio::new(1, 3), &ctx), Err(Error::InvalidExponent(_))));
        let k1 = RootContext::new(1, Mode::Exact);
        assert_eq!(scalar_power(&k1.from_int(2), half, &k1), Err(Error::InexactHalfPower));
        let fl = RootContext::new(1, Mode::Float);
        let s = scalar_power(&fl.from_int(2), half, &fl).unwrap().to_complex();
        assert!((s.re - std::f64::consts::SQRT_2).abs() < 1e-14 && s.im == 0.0);
        let inv = scalar_power(&fl.from_int(2), Ratio::new(-1, 2), &fl).unwrap().to_complex();
        assert!((inv.re - 1.0 / std::f64::consts::SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn complex_text_form() {
        assert_eq!(format_complex(Complex64::new(2.0, 0.0)), "2.000000000000+0.000000000000*i");
        assert_eq!(format_complex(Complex64::new(-0.5, -1e-15)), "-0.500000000000+0.000000000000*i");
        assert_eq!(format_complex(Complex64::new(0.0, -1.25)), "0.000000000000-1.250000000000*i");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-30i64..30, -9i128..9), 0..8).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(p in arb_poly(), q in arb_poly(), k in 0u32..5) {
            let ex = RootContext::new(k, Mode::Exact);
            let fl = RootContext::new(k, Mode::Float);
            prop_assert_eq!(ex.eval(&(&p * &q)), &ex.eval(&p) * &ex.eval(&q));
            prop_assert_eq!(ex.eval(&(&p + &q)), &ex.eval(&p) + &ex.eval(&q));
            let prod = fl.eval(&(&p * &q)).to_complex();
            let sum = fl.eval(&(&p + &q)).to_complex();
            prop_assert!((prod - fl.eval(&p).to_complex() * fl.eval(&q).to_complex()).norm() < 1e-10 * (1.0 + prod.norm()));
            prop_assert!((sum - fl.eval(&p).to_complex() - fl.eval(&q).to_complex()).norm() < 1e-10);
            // exact representation agrees with its float shadow
            prop_assert!((ex.eval(&p).to_complex() - p.eval_complex(ex.a())).norm() < 1e-10);
        }

        #[test]
        fn exact_division_roundtrip(p in arb_poly(), q in arb_poly(), k in 0u32..4) {
            let ex = RootContext::new(k, Mode::Exact);
            let (x, y) = (ex.eval(&p), ex.eval(&q));
            prop_assume!(!y.is_zero());
            prop_assert_eq!(&x.checked_div(&y).unwrap() * &y, x);
        }
    }
}
