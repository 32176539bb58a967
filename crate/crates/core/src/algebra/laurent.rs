use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Integer Laurent polynomial in the bracket variable `A`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `A^(low + i)`. The
/// vector never starts or ends with a zero, so equal polynomials have equal
/// representations and the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i128>,
}

fn checked_add(x: i128, y: i128) -> i128 {
    x.checked_add(y).expect("Laurent coefficient overflow")
}

fn checked_mul(x: i128, y: i128) -> i128 {
    x.checked_mul(y).expect("Laurent coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: i128, e: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i128)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = checked_add(*slot, c);
        }
        Self::normalized(lo, coeffs)
    }

    fn normalized(mut low: i64, mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i64;
        }
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> i128 {
        if e < self.low {
            return 0;
        }
        self.coeffs.get((e - self.low) as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i64, c))
    }

    /// Multiplies by `A^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|&x| checked_mul(x, c)).collect() }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        let lo = self.low.min(other.low);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        if lo == self.low && hi == self.max_exp().unwrap() {
            let off = (other.low - self.low) as usize;
            for (i, &c) in other.coeffs.iter().enumerate() {
                self.coeffs[off + i] = checked_add(self.coeffs[off + i], c);
            }
            let low = self.low;
            let coeffs = std::mem::take(&mut self.coeffs);
            *self = Self::normalized(low, coeffs);
            return;
        }
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - lo) as usize + i];
            *slot = checked_add(*slot, c);
        }
        *self = Self::normalized(lo, coeffs);
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `A -> A^-1`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// Exact division; `None` if `divisor` is zero or does not divide `self`
    /// in `Z[A, A^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        let dlead = *divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return None;
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + dlen - 1];
            if top == 0 {
                continue;
            }
            if top % dlead != 0 {
                return None;
            }
            let q = top / dlead;
            quot[i] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].checked_sub(checked_mul(q, dc)).expect("Laurent coefficient overflow");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::normalized(self.low - divisor.low, quot))
    }

    pub fn eval_complex(&self, a: Complex64) -> Complex64 {
        self.terms().map(|(e, c)| a.powi(e as i32) * c as f64).sum()
    }

    /// `[m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2})`.
    pub fn quantum_integer(m: u32) -> Self {
        let m = m as i64;
        Self::from_terms((0..m).map(|j| (2 * (m - 1) - 4 * j, 1)))
    }

    /// Loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending terms `c*A^e` joined by ` + `; the constant term prints as
    /// the bare integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*A^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = checked_add(coeffs[i + j], checked_mul(x, y));
            }
        }
        LaurentPoly::normalized(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i64..8, -20i128..20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn text_form() {
        assert_eq!(LaurentPoly::delta().to_string(), "-1*A^-2 + -1*A^2");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let p = LaurentPoly::from_terms([(4, 1), (0, 1), (-4, 1)]);
        assert_eq!(p.to_string(), "1*A^-4 + 1 + 1*A^4");
    }

    #[test]
    fn quantum_integers() {
        assert!(LaurentPoly::quantum_integer(0).is_zero());
        assert!(LaurentPoly::quantum_integer(1).is_one());
        assert_eq!(LaurentPoly::quantum_integer(3), LaurentPoly::from_terms([(4, 1), (0, 1), (-4, 1)]));
        // [2]^2 = [3] + 1
        let q2 = LaurentPoly::quantum_integer(2);
        assert_eq!(&q2 * &q2, &LaurentPoly::quantum_integer(3) + &LaurentPoly::one());
        assert_eq!(LaurentPoly::delta(), -LaurentPoly::quantum_integer(2));
    }

    #[test]
    fn exact_division() {
        let q3 = LaurentPoly::quantum_integer(3);
        let d = LaurentPoly::delta();
        let prod = &q3 * &d;
        assert_eq!(prod.div_exact(&d), Some(q3.clone()));
        assert_eq!(prod.div_exact(&q3), Some(d.clone()));
        assert_eq!(q3.div_exact(&d), None);
        assert_eq!(q3.div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn zero_coefficients_are_trimmed() {
        let p = LaurentPoly::from_terms([(1, 3), (1, -3), (5, 0)]);
        assert!(p.is_zero());
        let q = &LaurentPoly::monomial(2, 3) - &LaurentPoly::monomial(2, 3);
        assert_eq!(q, LaurentPoly::zero());
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        }

        #[test]
        fn division_inverts_multiplication(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
        }
    }
}
