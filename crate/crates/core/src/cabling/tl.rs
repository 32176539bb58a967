//! Temperley-Lieb diagrams and formal combinations with rational
//! coefficients in `A` whose denominators are products of quantum integers.

use std::collections::BTreeMap;

use crate::algebra::LaurentPoly;

/// Crossingless matching of `2n` points: bottom `0..n` and top `n..2n`,
/// both numbered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TlDiagram {
    strands: usize,
    pairing: Vec<usize>,
}

impl TlDiagram {
    pub fn identity(n: usize) -> Self {
        let pairing = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self { strands: n, pairing }
    }

    /// Generator `e_i` (`1 <= i < n`): a cap on bottom points `i-1, i` and
    /// a cup on the matching top points.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut d = Self::identity(n);
        let (l, r) = (i - 1, i);
        d.pairing[l] = r;
        d.pairing[r] = l;
        d.pairing[n + l] = n + r;
        d.pairing[n + r] = n + l;
        d
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.strands)
    }

    /// Stacks `upper` on top of `self`; returns the result and the number
    /// of closed loops formed in the middle.
    pub fn compose(&self, upper: &TlDiagram) -> (TlDiagram, usize) {
        let n = self.strands;
        assert_eq!(n, upper.strands, "strand counts differ");
        // point p of the lower diagram is (false, p), of the upper (true, p)
        let external = |upper_side: bool, p: usize| if upper_side { p >= n } else { p < n };
        let mut pairing = vec![usize::MAX; 2 * n];
        let mut seen_mid = vec![false; n];
        let walk = |mut side: bool, mut p: usize, seen_mid: &mut Vec<bool>| -> usize {
            loop {
                let q = if side { upper.pairing[p] } else { self.pairing[p] };
                if external(side, q) {
                    return q;
                }
                let mid = if side { q } else { q - n };
                seen_mid[mid] = true;
                side = !side;
                p = if side { mid } else { mid + n };
            }
        };
        for p in 0..n {
            if pairing[p] == usize::MAX {
                let q = walk(false, p, &mut seen_mid);
                pairing[p] = q;
                pairing[q] = p;
            }
        }
        for p in n..2 * n {
            if pairing[p] == usize::MAX {
                let q = walk(true, p, &mut seen_mid);
                pairing[p] = q;
                pairing[q] = p;
            }
        }
        let mut loops = 0;
        for start in 0..n {
            if seen_mid[start] {
                continue;
            }
            loops += 1;
            // follow the closed curve through the middle points
            let mut mid = start;
            loop {
                seen_mid[mid] = true;
                let q = upper.pairing[mid];
                let m2 = q;
                seen_mid[m2] = true;
                let back = self.pairing[m2 + n] - n;
                if back == start {
                    break;
                }
                mid = back;
            }
        }
        (TlDiagram { strands: n, pairing }, loops)
    }

    /// Adds a through-strand on the right.
    pub fn tensor_id(&self) -> TlDiagram {
        let n = self.strands;
        let lift = |p: usize| if p < n { p } else { p + 1 };
        let mut pairing = vec![0; 2 * (n + 1)];
        for (p, &q) in self.pairing.iter().enumerate() {
            pairing[lift(p)] = lift(q);
        }
        pairing[n] = 2 * n + 1;
        pairing[2 * n + 1] = n;
        TlDiagram { strands: n + 1, pairing }
    }
}

/// `num / prod_m [m]^den[m-1]`.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: Vec<u32>,
}

impl RatFunc {
    pub fn from_poly(num: LaurentPoly) -> Self {
        Self { num, den: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Exponent of `[m]` in the denominator.
    pub fn den_exponent(&self, m: usize) -> u32 {
        self.den.get(m - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divides by `[m]`.
    pub fn over_qint(mut self, m: usize) -> Self {
        if self.den.len() < m {
            self.den.resize(m, 0);
        }
        self.den[m - 1] += 1;
        self.simplify()
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self { num: &self.num * p, den: self.den.clone() }.simplify()
    }

    pub fn mul(&self, other: &RatFunc) -> Self {
        let len = self.den.len().max(other.den.len());
        let den = (1..=len).map(|m| self.den_exponent(m) + other.den_exponent(m)).collect();
        Self { num: &self.num * &other.num, den }.simplify()
    }

    pub fn add(&self, other: &RatFunc) -> Self {
        let len = self.den.len().max(other.den.len());
        let den: Vec<u32> = (1..=len).map(|m| self.den_exponent(m).max(other.den_exponent(m))).collect();
        let num = &self.numerator_over(&den) + &other.numerator_over(&den);
        Self { num, den }.simplify()
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    /// Numerator after rewriting over the larger denominator `den`.
    pub fn numerator_over(&self, den: &[u32]) -> LaurentPoly {
        let mut num = self.num.clone();
        for (i, &e) in den.iter().enumerate() {
            let have = self.den_exponent(i + 1);
            assert!(e >= have, "target denominator too small");
            if e > have {
                num = &num * &LaurentPoly::quantum_integer(i as u32 + 1).pow(e - have);
            }
        }
        num
    }

    fn simplify(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for m in (2..=self.den.len()).rev() {
            let q = LaurentPoly::quantum_integer(m as u32);
            while self.den[m - 1] > 0 {
                match self.num.div_exact(&q) {
                    Some(p) => {
                        self.num = p;
                        self.den[m - 1] -= 1;
                    }
                    None => break,
                }
            }
        }
        if !self.den.is_empty() {
            // [1] = 1
            self.den[0] = 0;
        }
        while self.den.last() == Some(&0) {
            self.den.pop();
        }
        self
    }
}

/// Formal combination of diagrams on a fixed number of strands.
#[derive(Debug, Clone)]
pub struct TlElement {
    strands: usize,
    terms: Vec<(TlDiagram, RatFunc)>,
}

impl TlElement {
    pub fn from_diagram(d: TlDiagram) -> Self {
        Self { strands: d.strands(), terms: vec![(d, RatFunc::one())] }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> &[(TlDiagram, RatFunc)] {
        &self.terms
    }

    fn collect(strands: usize, raw: impl IntoIterator<Item = (TlDiagram, RatFunc)>) -> Self {
        let mut acc: BTreeMap<TlDiagram, RatFunc> = BTreeMap::new();
        for (d, c) in raw {
            match acc.get_mut(&d) {
                Some(x) => *x = x.add(&c),
                None => {
                    acc.insert(d, c);
                }
            }
        }
        Self { strands, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn add(&self, other: &TlElement) -> Self {
        Self::collect(self.strands, self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn sub(&self, other: &TlElement) -> Self {
        Self::collect(self.strands, self.terms.iter().cloned().chain(other.terms.iter().map(|(d, c)| (d.clone(), c.neg()))))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::collect(self.strands, self.terms.iter().map(|(d, x)| (d.clone(), x.mul(c))))
    }

    /// `self` below, `upper` on top; closed loops become factors of delta.
    pub fn compose(&self, upper: &TlElement) -> Self {
        let delta = LaurentPoly::delta();
        let mut raw = Vec::with_capacity(self.terms.len() * upper.terms.len());
        for (d1, c1) in &self.terms {
            for (d2, c2) in &upper.terms {
                let (d, loops) = d1.compose(d2);
                raw.push((d, c1.mul(c2).mul_poly(&delta.pow(loops as u32))));
            }
        }
        Self::collect(self.strands, raw)
    }

    pub fn tensor_id(&self) -> Self {
        Self { strands: self.strands + 1, terms: self.terms.iter().map(|(d, c)| (d.tensor_id(), c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
