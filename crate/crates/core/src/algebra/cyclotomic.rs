use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let ql = rem.len() - dl + 1;
    let mut quot = vec![0i64; ql];
    for i in (0..ql).rev() {
        let q = rem[i + dl - 1];
        quot[i] = q;
        for (j, &c) in den.iter().enumerate() {
            rem[i + j] -= q * c;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// The field `Q(zeta)` with `zeta = exp(2 pi i / order)`, elements written in
/// the power basis `1, zeta, ..., zeta^(deg - 1)` modulo `Phi_order`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    phi: Vec<i64>,
    /// `zeta^j` reduced, for `0 <= j < order`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce the x^deg term
            let top = cur[deg - 1];
            for j in (1..deg).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..deg {
                    cur[j] -= top * phi[j];
                }
            }
        }
        Self { order, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Reduced coordinates of `zeta^e`.
    pub fn power(&self, e: i64) -> &[i64] {
        &self.powers[e.rem_euclid(self.order as i64) as usize]
    }

    pub fn zeta(&self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.order as f64)
    }

    /// Exponents `t` coprime to the order: `zeta -> zeta^t` runs over all
    /// embeddings.
    pub fn galois_exponents(&self) -> Vec<u32> {
        (1..self.order).filter(|&t| gcd_u32(t, self.order) == 1).collect()
    }
}

/// An exact element of a cyclotomic field: integer coordinates over a
/// positive common denominator, kept in lowest terms.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.num == other.num && self.den == other.den
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self { field: field.clone(), num: vec![BigInt::zero(); field.degree()], den: BigInt::one() }
    }

    pub fn from_int(field: &Arc<CyclotomicField>, c: i64) -> Self {
        let mut out = Self::zero(field);
        out.num[0] = BigInt::from(c);
        out.normalize();
        out
    }

    /// Element from integer coordinates over `den`.
    pub fn from_parts(field: &Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        assert_eq!(num.len(), field.degree());
        assert!(!den.is_zero());
        let mut out = Self { field: field.clone(), num, den };
        out.normalize();
        out
    }

    /// `sum_j coeffs[j] * zeta^(j + offset)`, reduced.
    pub fn from_exponent_coeffs(field: &Arc<CyclotomicField>, coeffs: &[i128], offset: i64) -> Self {
        let deg = field.degree();
        let mut acc = vec![0i128; deg];
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (slot, &p) in acc.iter_mut().zip(field.power(j as i64 + offset)) {
                *slot = slot.checked_add(c.checked_mul(p as i128).expect("cyclotomic overflow")).expect("cyclotomic overflow");
            }
        }
        Self::from_parts(field, acc.into_iter().map(BigInt::from).collect(), BigInt::one())
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() && !g.is_zero() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field.order, other.field.order, "mixing elements of different cyclotomic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        let den = &self.den * &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Self::from_parts(&self.field, num, den)
    }

    pub fn neg(&self) -> Self {
        Self { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        let deg = self.field.degree();
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut num = vec![BigInt::zero(); deg];
        for (e, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < deg {
                num[e] += c;
            } else {
                for (slot, &p) in num.iter_mut().zip(self.field.power(e as i64)) {
                    if p != 0 {
                        *slot += &c * p;
                    }
                }
            }
        }
        Self::from_parts(&self.field, num, &self.den * &other.den)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the cyclotomic polynomial over the rationals.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a: Vec<BigRational> = self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect();
        let phi: Vec<BigRational> = self.field.phi.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        let (g, s) = ext_gcd_cofactor(trim(a), trim(phi));
        if g.len() != 1 {
            return None;
        }
        let inv: Vec<BigRational> = s.iter().map(|c| c / &g[0]).collect();
        let deg = self.field.degree();
        let mut den = BigInt::one();
        for c in &inv {
            den = den.lcm(c.denom());
        }
        let mut num = vec![BigInt::zero(); deg];
        for (i, c) in inv.iter().enumerate() {
            num[i] = c.numer() * (&den / c.denom());
        }
        Some(Self::from_parts(&self.field, num, den))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.mul(&inv))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(&self.field, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Value under `zeta -> zeta^t`.
    pub fn embed(&self, t: u32) -> Complex64 {
        let z = self.field.zeta().powu(t);
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zp = Complex64::new(1.0, 0.0);
        for c in &self.num {
            acc += zp * c.to_f64().unwrap_or(f64::NAN);
            zp *= z;
        }
        acc / den
    }

    pub fn to_complex(&self) -> Complex64 {
        self.embed(1)
    }

    /// Exact square root in the field, if one exists.
    ///
    /// Writes the element as `X / D` with `X` integral; a root `y` satisfies
    /// `(yD)^2 = X D`, and `yD` has integer coordinates. Candidate roots are
    /// assembled from complex square roots of every Galois conjugate (one sign
    /// choice per conjugate pair), rounded to integers, and verified exactly.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let field = &self.field;
        let deg = field.degree();
        let target = Self::from_parts(field, self.num.iter().map(|c| c * &self.den).collect(), BigInt::one());
        let exps = field.galois_exponents();
        // One representative of each conjugate pair {t, order - t}.
        let reps: Vec<u32> = exps.iter().copied().filter(|&t| t < field.order - t).collect();
        let roots: Vec<Complex64> = reps.iter().map(|&t| target.embed(t).sqrt()).collect();
        let free = reps.len().saturating_sub(1);
        if free > 20 {
            return None;
        }
        let z = field.zeta();
        for mask in 0u32..(1u32 << free) {
            // values at every embedding for this sign pattern
            let mut vals = Vec::with_capacity(exps.len());
            for &t in &exps {
                let (rep_idx, conj) = match reps.iter().position(|&r| r == t) {
                    Some(i) => (i, false),
                    None => (reps.iter().position(|&r| r == field.order - t).unwrap(), true),
                };
                let sign = if rep_idx > 0 && mask & (1 << (rep_idx - 1)) != 0 { -1.0 } else { 1.0 };
                let v = roots[rep_idx] * sign;
                vals.push(if conj { v.conj() } else { v });
            }
            // Solve the Vandermonde system sum_j c_j zeta^(t j) = vals[t].
            let mut rows: Vec<Vec<Complex64>> = exps
                .iter()
                .zip(&vals)
                .map(|(&t, &v)| {
                    let zt = z.powu(t);
                    let mut row: Vec<Complex64> = (0..deg).map(|j| zt.powu(j as u32)).collect();
                    row.push(v);
                    row
                })
                .collect();
            let Some(coords) = solve_complex(&mut rows) else { continue };
            if coords.iter().any(|c| c.im.abs() > 1e-6 || !c.re.is_finite() || c.re.abs() > 1e15) {
                continue;
            }
            let cand_num: Vec<BigInt> = coords.iter().map(|c| BigInt::from(c.re.round() as i64)).collect();
            let cand = Self::from_parts(field, cand_num, BigInt::one());
            if cand.mul(&cand) == target {
                return Some(Self::from_parts(field, cand.num.clone(), self.den.clone()));
            }
        }
        None
    }
}

fn solve_complex(rows: &mut [Vec<Complex64>]) -> Option<Vec<Complex64>> {
    let n = rows.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| rows[a][col].norm().partial_cmp(&rows[b][col].norm()).unwrap())?;
        if rows[piv][col].norm() < 1e-12 {
            return None;
        }
        rows.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = rows[r][col] / rows[col][col];
                for c in col..=n {
                    let v = rows[col][c];
                    rows[r][c] -= f * v;
                }
            }
        }
    }
    Some((0..n).map(|i| rows[i][n] / rows[i][i]).collect())
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let q = &rem[i + b.len() - 1] / &lead;
        if q.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            rem[i + j] = &rem[i + j] - &q * c;
        }
        quot[i] = q;
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

/// Returns `(g, s)` with `s * a = g (mod m)`, `g = gcd(a, m)`.
fn ext_gcd_cofactor(a: Vec<BigRational>, m: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{}>({})", self.field.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    /// `(c0 + c1*z^1 + ...)/den` in the power basis of `z = exp(2 pi i/order)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| if j == 0 { c.to_string() } else { format!("{c}*z^{j}") })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(24).len() - 1, 8);
    }

    #[test]
    fn power_table_matches_complex_values() {
        let field = Arc::new(CyclotomicField::new(20));
        let z = field.zeta();
        for e in -25..25i64 {
            let v = Cyclotomic::from_exponent_coeffs(&field, &[1], e).to_complex();
            assert!((v - z.powi(e as i32)).norm() < 1e-12);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let field = Arc::new(CyclotomicField::new(16));
        let x = Cyclotomic::from_exponent_coeffs(&field, &[3, -1, 0, 2, 5], -2);
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul(&inv), Cyclotomic::from_int(&field, 1));
        assert!(Cyclotomic::zero(&field).inverse().is_none());
    }

    #[test]
    fn exact_square_roots() {
        let field = Arc::new(CyclotomicField::new(16));
        let four = Cyclotomic::from_int(&field, 4);
        assert_eq!(four.sqrt(), Some(Cyclotomic::from_int(&field, 2)));
        // sqrt(2) = z^2 + z^-2 lives in Q(zeta_16)
        let two = Cyclotomic::from_int(&field, 2);
        let r = two.sqrt().unwrap();
        assert_eq!(r.mul(&r), two);
        // but not in Q(zeta_12)
        let f12 = Arc::new(CyclotomicField::new(12));
        assert!(Cyclotomic::from_int(&f12, 2).sqrt().is_none());
        let quarter = Cyclotomic::from_parts(&f12, vec![BigInt::from(1), 0.into(), 0.into(), 0.into()], BigInt::from(4));
        assert_eq!(quarter.sqrt().map(|r| r.mul(&r)), Some(quarter));
    }
}
