//! Kauffman bracket, Jones polynomial and the oriented skein relation.
//!
//! Conventions: the empty diagram has bracket 1, a crossing resolves as
//! `A <A-smoothing> + A^-1 <B-smoothing>` and each closed loop contributes
//! `delta = -A^2 - A^-2`.

mod network;

use std::fmt;

use num_rational::Ratio;

pub use network::{state_sum, BoxTerm, Node, PlanarNetwork};

use crate::algebra::{LaurentPoly, Symbolic};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::Limits;

/// Largest diagram accepted by the exhaustive oracle.
pub const BRUTEFORCE_MAX_CROSSINGS: usize = 16;

fn check_crossings(d: &Diagram, limit: usize) -> Result<()> {
    if d.crossing_count() > limit {
        return Err(Error::ResourceLimit { what: "crossing count", actual: d.crossing_count(), limit });
    }
    Ok(())
}

pub fn bracket(d: &Diagram, limits: &Limits) -> Result<LaurentPoly> {
    check_crossings(d, limits.max_crossings)?;
    Ok(state_sum(&PlanarNetwork::from_diagram(d), &Symbolic))
}

/// Sum over all `2^c` smoothings with a fresh loop count for each one.
pub fn bracket_bruteforce(d: &Diagram) -> Result<LaurentPoly> {
    check_crossings(d, BRUTEFORCE_MAX_CROSSINGS)?;
    let arcs: Vec<u32> = d.components().iter().flat_map(|c| c.arcs.iter().copied()).collect();
    let index = |a: u32| arcs.iter().position(|&b| b == a).unwrap();
    let xs: Vec<[usize; 4]> = d.crossings().iter().map(|x| x.arcs.map(index)).collect();
    let c = xs.len();
    let delta = LaurentPoly::delta();
    let mut total = LaurentPoly::zero();
    let mut parent = vec![0usize; arcs.len()];
    for mask in 0u32..(1u32 << c) {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        for (i, &[a, b, cc, dd]) in xs.iter().enumerate() {
            if mask >> i & 1 == 0 {
                union(&mut parent, a, b);
                union(&mut parent, cc, dd);
            } else {
                union(&mut parent, a, dd);
                union(&mut parent, b, cc);
            }
        }
        let loops = (0..arcs.len()).filter(|&i| find(&mut parent, i) == i).count() + d.loop_count();
        let n_b = mask.count_ones() as i64;
        let exp = (c as i64 - n_b) - n_b;
        total = total + delta.pow(loops as u32).shift(exp);
    }
    Ok(total)
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// `(-A^3)^-w`.
pub fn writhe_factor(writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, -3 * writhe)
}

/// Writhe-normalized bracket `(-A^3)^-w <D>`, an isotopy invariant.
pub fn normalized_bracket(d: &Diagram, limits: &Limits) -> Result<LaurentPoly> {
    Ok(&writhe_factor(d.writhe()) * &bracket(d, limits)?)
}

/// Jones polynomial in the variable `A`, normalized to 1 on the unknot.
pub fn jones(d: &Diagram, limits: &Limits) -> Result<LaurentPoly> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let f = normalized_bracket(d, limits)?;
    Ok(f.div_exact(&LaurentPoly::delta()).expect("bracket of a nonempty diagram is divisible by delta"))
}

/// A Laurent polynomial in `A` read in the variable `t = A^-4`; exponents
/// of `t` are multiples of 1/4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPolynomial(pub LaurentPoly);

impl TPolynomial {
    /// Terms `(exponent of t, coefficient)` in increasing exponent.
    pub fn terms(&self) -> Vec<(Ratio<i64>, i128)> {
        let mut t: Vec<(Ratio<i64>, i128)> = self.0.terms().map(|(e, c)| (Ratio::new(-e, 4), c)).collect();
        t.sort_by_key(|x| x.0);
        t
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(e, c)| {
                if *e.numer() == 0 {
                    c.to_string()
                } else if e.is_integer() {
                    format!("{c}*t^{}", e.numer())
                } else {
                    format!("{c}*t^({}/{})", e.numer(), e.denom())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficients and residual of `alpha f(D+) + beta f(D-) + gamma f(D0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinCheck {
    pub alpha: LaurentPoly,
    pub beta: LaurentPoly,
    pub gamma: LaurentPoly,
    pub residual: LaurentPoly,
}

impl SkeinCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// The triple `(D+, D-, D0)` at crossing `site` of `d`.
pub fn skein_triple(d: &Diagram, site: usize) -> (Diagram, Diagram, Diagram) {
    let here = if d.crossings()[site].sign() > 0 { d.clone() } else { d.switch_crossing(site) };
    let switched = here.switch_crossing(site);
    let zero = here.oriented_smoothing(site);
    (here, switched, zero)
}

/// Evaluates the skein residual without checking that the three diagrams
/// form a triple.
pub fn skein_residual(plus: &Diagram, minus: &Diagram, zero: &Diagram, limits: &Limits) -> Result<SkeinCheck> {
    let alpha = LaurentPoly::monomial(1, 4);
    let beta = LaurentPoly::monomial(-1, -4);
    let gamma = LaurentPoly::from_terms([(2, 1), (-2, -1)]);
    let residual = &(&alpha * &normalized_bracket(plus, limits)?)
        + &(&(&beta * &normalized_bracket(minus, limits)?) + &(&gamma * &normalized_bracket(zero, limits)?));
    Ok(SkeinCheck { alpha, beta, gamma, residual })
}

/// Checks that the diagrams differ at exactly one crossing (positive in
/// `plus`, switched in `minus`, oriented-smoothed in `zero`) and evaluates
/// the residual. Returns the index of the site in `plus`.
pub fn check_skein(plus: &Diagram, minus: &Diagram, zero: &Diagram, limits: &Limits) -> Result<(usize, SkeinCheck)> {
    let site = find_site(plus, minus, zero)?;
    Ok((site, skein_residual(plus, minus, zero, limits)?))
}

fn find_site(plus: &Diagram, minus: &Diagram, zero: &Diagram) -> Result<usize> {
    if plus.crossing_count() != minus.crossing_count() {
        return Err(Error::SiteMismatch("D+ and D- have different crossing counts".into()));
    }
    if zero.crossing_count() + 1 != plus.crossing_count() {
        return Err(Error::SiteMismatch("D0 must have exactly one crossing fewer than D+".into()));
    }
    for site in 0..plus.crossing_count() {
        if plus.crossings()[site].sign() < 0 {
            continue;
        }
        let switched = plus.switch_crossing(site);
        if switched.same_up_to_relabeling(minus) && plus.oriented_smoothing(site).same_up_to_relabeling(zero) {
            return Ok(site);
        }
    }
    Err(Error::SiteMismatch("no positive crossing of D+ relates the three diagrams".into()))
}
