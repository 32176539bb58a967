//! Coefficient rings for state sums.
//!
//! A state sum only ever multiplies by powers of `A`, by loop factors and by
//! a handful of fixed polynomials, so each ring exposes exactly that.

use num_complex::Complex64;

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::root::{Mode, RootContext, RootScalar};

pub trait Ring: Sync {
    type Elem: Clone + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem);
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// `x * A^e`.
    fn shift(&self, x: &Self::Elem, e: i64) -> Self::Elem;
    fn embed(&self, p: &LaurentPoly) -> Self::Elem;
}

/// Generic `A`: values are Laurent polynomials.
#[derive(Debug, Clone, Copy, Default)]
pub struct Symbolic;

impl Ring for Symbolic {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn is_zero(&self, x: &LaurentPoly) -> bool {
        x.is_zero()
    }
    fn add_assign(&self, acc: &mut LaurentPoly, x: &LaurentPoly) {
        acc.add_assign_ref(x);
    }
    fn mul(&self, x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
        x * y
    }
    fn shift(&self, x: &LaurentPoly, e: i64) -> LaurentPoly {
        x.shift(e)
    }
    fn embed(&self, p: &LaurentPoly) -> LaurentPoly {
        p.clone()
    }
}

/// `Z[x] / (x^{2r} + 1)`, which maps onto `Z[A]` at a primitive `4r`-th root.
///
/// Multiplication by `A` is a signed rotation; reduction to the canonical
/// cyclotomic form happens once, in [`Folded::to_scalar`].
#[derive(Debug, Clone)]
pub struct Folded {
    ctx: RootContext,
    len: usize,
}

impl Folded {
    pub fn new(ctx: &RootContext) -> Self {
        Self { ctx: ctx.with_mode(Mode::Exact), len: 2 * ctx.rank() as usize }
    }

    pub fn to_scalar(&self, x: &[i128]) -> RootScalar {
        RootScalar::Exact(Cyclotomic::from_exponent_coeffs(self.ctx.field(), x, 0))
    }

    fn slot(&self, e: i64) -> (usize, bool) {
        let period = 2 * self.len as i64;
        let e = e.rem_euclid(period);
        if e >= self.len as i64 {
            ((e - self.len as i64) as usize, true)
        } else {
            (e as usize, false)
        }
    }
}

fn add_c(x: i128, y: i128) -> i128 {
    x.checked_add(y).expect("exact state-sum coefficient overflow")
}

impl Ring for Folded {
    type Elem = Vec<i128>;

    fn zero(&self) -> Vec<i128> {
        vec![0; self.len]
    }
    fn one(&self) -> Vec<i128> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }
    fn is_zero(&self, x: &Vec<i128>) -> bool {
        x.iter().all(|&c| c == 0)
    }
    fn add_assign(&self, acc: &mut Vec<i128>, x: &Vec<i128>) {
        for (a, &b) in acc.iter_mut().zip(x) {
            *a = add_c(*a, b);
        }
    }
    fn mul(&self, x: &Vec<i128>, y: &Vec<i128>) -> Vec<i128> {
        let n = self.len;
        let mut out = vec![0i128; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let p = a.checked_mul(b).expect("exact state-sum coefficient overflow");
                let k = i + j;
                if k >= n {
                    out[k - n] = out[k - n].checked_sub(p).expect("exact state-sum coefficient overflow");
                } else {
                    out[k] = add_c(out[k], p);
                }
            }
        }
        out
    }
    fn shift(&self, x: &Vec<i128>, e: i64) -> Vec<i128> {
        let mut out = vec![0i128; self.len];
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                let (j, neg) = self.slot(i as i64 + e);
                out[j] = if neg { -c } else { c };
            }
        }
        out
    }
    fn embed(&self, p: &LaurentPoly) -> Vec<i128> {
        let mut out = self.zero();
        for (e, c) in p.terms() {
            let (j, neg) = self.slot(e);
            out[j] = add_c(out[j], if neg { -c } else { c });
        }
        out
    }
}

/// Floating point evaluation at `A = exp(i pi / 2r)`.
#[derive(Debug, Clone)]
pub struct ComplexRing {
    powers: Vec<Complex64>,
}

impl ComplexRing {
    pub fn new(ctx: &RootContext) -> Self {
        let order = ctx.order();
        let step = 2.0 * std::f64::consts::PI / order as f64;
        Self { powers: (0..order).map(|j| Complex64::from_polar(1.0, step * j as f64)).collect() }
    }

    fn a_pow(&self, e: i64) -> Complex64 {
        self.powers[e.rem_euclid(self.powers.len() as i64) as usize]
    }
}

impl Ring for ComplexRing {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self, x: &Complex64) -> bool {
        x.re == 0.0 && x.im == 0.0
    }
    fn add_assign(&self, acc: &mut Complex64, x: &Complex64) {
        *acc += x;
    }
    fn mul(&self, x: &Complex64, y: &Complex64) -> Complex64 {
        x * y
    }
    fn shift(&self, x: &Complex64, e: i64) -> Complex64 {
        x * self.a_pow(e)
    }
    fn embed(&self, p: &LaurentPoly) -> Complex64 {
        p.terms().map(|(e, c)| self.a_pow(e) * c as f64).sum()
    }
}
