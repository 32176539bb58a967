//! Surgery invariant of closed 3-manifolds from omega-insertions.
//!
//! Each surgery component carries `omega = sum_n w(n) W^n` with
//! `w(n) = (-1)^n [n+1]`; the expectation is normalized by the
//! `+1` and `-1` framed unknots raised to the counts of positive and
//! negative eigenvalues of the linking matrix.

use rayon::prelude::*;

use crate::algebra::{format_complex, Mode, RootContext, RootScalar};
use crate::cabling::colored_bracket_at;
use crate::diagram::{linking_matrix, signature_nullity, Diagram, Inertia, LinkingMatrix};
use crate::error::{Error, Result};
use crate::Limits;

/// Largest level accepted by the surgery invariants.
pub const MAX_LEVEL: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    All,
    /// Only even colors (integer spins).
    Even,
}

#[derive(Debug, Clone)]
pub struct OmegaWeights {
    level: u32,
    parity: Parity,
    entries: Vec<(u32, RootScalar)>,
}

impl OmegaWeights {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn entries(&self) -> &[(u32, RootScalar)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Weights `(-1)^n [n+1]` for the colors `0..=k` admitted by `parity`.
pub fn omega_weights(ctx: &RootContext, parity: Parity) -> OmegaWeights {
    let entries = (0..=ctx.level())
        .filter(|n| parity == Parity::All || n % 2 == 0)
        .map(|n| {
            let q = ctx.quantum_integer(n + 1);
            (n, if n % 2 == 0 { q } else { -&q })
        })
        .collect();
    OmegaWeights { level: ctx.level(), parity, entries }
}

/// How one component enters an omega-insertion.
#[derive(Debug, Clone)]
pub enum Insertion {
    Fixed(u32),
    Omega(OmegaWeights),
}

/// `sum over colorings of prod weights * <L; colors>` at the root of `ctx`.
/// The sum is evaluated in parallel and accumulated in a fixed order.
pub fn omega_insert(d: &Diagram, slots: &[Insertion], ctx: &RootContext, limits: &Limits) -> Result<RootScalar> {
    assert_eq!(slots.len(), d.component_count());
    let radices: Vec<usize> = slots
        .iter()
        .map(|s| match s {
            Insertion::Fixed(_) => 1,
            Insertion::Omega(w) => w.len(),
        })
        .collect();
    let total: usize = radices.iter().product();
    let term = |mut idx: usize| -> Result<RootScalar> {
        let mut colors = Vec::with_capacity(slots.len());
        let mut weight = ctx.one();
        for (slot, &radix) in slots.iter().zip(&radices) {
            let i = idx % radix;
            idx /= radix;
            match slot {
                Insertion::Fixed(c) => colors.push(*c),
                Insertion::Omega(w) => {
                    let (c, wt) = &w.entries[i];
                    colors.push(*c);
                    weight = &weight * wt;
                }
            }
        }
        Ok(&weight * &colored_bracket_at(d, &colors, ctx, limits)?)
    };
    let terms: Vec<RootScalar> = (0..total).into_par_iter().map(term).collect::<Result<_>>()?;
    Ok(terms.iter().fold(ctx.zero(), |acc, t| &acc + t))
}

/// A framed link in `S^3` whose unbarred components are surgery data and
/// whose barred components form a colored link in the resulting manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryPresentation {
    diagram: Diagram,
}

impl SurgeryPresentation {
    pub fn new(diagram: Diagram) -> Result<Self> {
        if let Some(c) = diagram.components().iter().find(|c| c.dotted) {
            return Err(Error::InvalidPresentation(format!(
                "component {} is dotted; surgery presentations have no one-handles",
                c.id
            )));
        }
        Ok(Self { diagram })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn surgery_components(&self) -> Vec<usize> {
        (0..self.diagram.component_count()).filter(|&i| !self.diagram.components()[i].barred).collect()
    }

    /// Linking matrix of the surgery link alone.
    pub fn linking_matrix(&self) -> LinkingMatrix {
        linking_matrix(&self.diagram).submatrix(&self.surgery_components())
    }

    pub fn inertia(&self) -> Inertia {
        signature_nullity(&self.linking_matrix())
    }
}

fn check_level(ctx: &RootContext) -> Result<()> {
    if ctx.level() > MAX_LEVEL {
        return Err(Error::LevelOutOfRange { level: ctx.level(), max: MAX_LEVEL });
    }
    Ok(())
}

/// `<omega_{C_1} ... omega_{C_N}>` with barred components at their colors.
pub fn omega_expectation(p: &SurgeryPresentation, ctx: &RootContext, limits: &Limits) -> Result<RootScalar> {
    check_level(ctx)?;
    let omega = omega_weights(ctx, Parity::All);
    let slots: Vec<Insertion> = p
        .diagram
        .components()
        .iter()
        .map(|c| if c.barred { Insertion::Fixed(c.color.unwrap_or(0)) } else { Insertion::Omega(omega.clone()) })
        .collect();
    omega_insert(&p.diagram, &slots, ctx, limits)
}

/// `<omega>` on the `sign`-framed unknot.
pub fn framed_unknot_expectation(sign: i64, ctx: &RootContext, limits: &Limits) -> Result<RootScalar> {
    let p = SurgeryPresentation::new(Diagram::unknot(sign))?;
    omega_expectation(&p, ctx, limits)
}

fn is_vanishing(x: &RootScalar, ctx: &RootContext) -> bool {
    match x {
        RootScalar::Exact(c) => c.is_zero(),
        RootScalar::Float(_) => x.is_negligible(ctx.tolerance()),
    }
}

/// Normalized invariant `<omega ... omega> / (<omega_+>^b+ <omega_->^b-)`.
pub fn rtw_invariant(p: &SurgeryPresentation, ctx: &RootContext, limits: &Limits) -> Result<RootScalar> {
    let num = omega_expectation(p, ctx, limits)?;
    let inertia = p.inertia();
    let mut den = ctx.one();
    for (sign, count, name) in [(1, inertia.positive, "<omega_+>"), (-1, inertia.negative, "<omega_->")] {
        if count == 0 {
            continue;
        }
        let w = framed_unknot_expectation(sign, ctx, limits)?;
        if is_vanishing(&w, ctx) {
            return Err(Error::DegenerateNormalizer(name));
        }
        den = &den * &w.powi(count as i64).expect("nonzero base");
    }
    Ok(num.checked_div(&den).expect("normalizer checked nonzero"))
}

/// Comparison of two values at one level.
#[derive(Debug, Clone)]
pub struct LevelComparison {
    pub level: u32,
    pub left: RootScalar,
    pub right: RootScalar,
    /// `|left - right|` as complex numbers.
    pub difference: f64,
    /// Both sides were exact and compared exactly.
    pub exact: bool,
    pub equal: bool,
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub rows: Vec<LevelComparison>,
}

impl EquivalenceReport {
    pub fn equivalent(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }
}

pub(crate) fn compare(level: u32, left: RootScalar, right: RootScalar, tolerance: f64) -> LevelComparison {
    let difference = (left.to_complex() - right.to_complex()).norm();
    let (exact, equal) = match (&left, &right) {
        (RootScalar::Exact(a), RootScalar::Exact(b)) => (true, a == b),
        _ => (false, difference < tolerance),
    };
    LevelComparison { level, left, right, difference, exact, equal }
}

/// Evaluates both presentations at every level and compares the results.
pub fn kirby_equiv_check(
    p1: &SurgeryPresentation,
    p2: &SurgeryPresentation,
    levels: &[u32],
    mode: Mode,
    tolerance: f64,
    limits: &Limits,
) -> Result<EquivalenceReport> {
    let mut rows = Vec::with_capacity(levels.len());
    for &k in levels {
        let ctx = RootContext::new(k, mode).with_tolerance(tolerance);
        rows.push(compare(k, rtw_invariant(p1, &ctx, limits)?, rtw_invariant(p2, &ctx, limits)?, tolerance));
    }
    Ok(EquivalenceReport { rows })
}

impl std::fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.rows {
            writeln!(
                f,
                "k={} left={} right={} diff={:.3e} {} {}",
                r.level,
                format_complex(r.left.to_complex()),
                format_complex(r.right.to_complex()),
                r.difference,
                if r.exact { "exact" } else { "float" },
                if r.equal { "equal" } else { "DIFFERENT" }
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn s1_s2(k: u32) -> Complex64 {
        let r = (k + 2) as f64;
        let s = (std::f64::consts::PI / r).sin();
        let sum: f64 = (0..=k).map(|n| (((n + 1) as f64) * std::f64::consts::PI / r).sin().powi(2) / (s * s)).sum();
        Complex64::new(sum, 0.0)
    }

    #[test]
    fn weights() {
        let w = omega_weights(&RootContext::new(0, Mode::Exact), Parity::All);
        assert_eq!(w.len(), 1);
        let w = omega_weights(&RootContext::new(1, Mode::Exact), Parity::All);
        assert!(w.entries()[1].1.approx_eq(&RootScalar::Float(Complex64::new(-1.0, 0.0)), 1e-12));
        let ctx = RootContext::new(2, Mode::Exact);
        let w = omega_weights(&ctx, Parity::Even);
        assert_eq!(w.entries().iter().map(|e| e.0).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(w.entries()[1].1, ctx.quantum_integer(3));
        assert_eq!(omega_weights(&RootContext::new(5, Mode::Exact), Parity::Even).len(), 3);
    }

    #[test]
    fn sphere_and_s1_s2() {
        let lim = Limits::default();
        for k in 1..=3 {
            let ctx = RootContext::new(k, Mode::Exact);
            let empty = SurgeryPresentation::new(Diagram::empty()).unwrap();
            assert_eq!(rtw_invariant(&empty, &ctx, &lim).unwrap(), ctx.one());
            let plus = SurgeryPresentation::new(Diagram::unknot(1)).unwrap();
            assert_eq!(rtw_invariant(&plus, &ctx, &lim).unwrap(), ctx.one());
            let zero = SurgeryPresentation::new(Diagram::unknot(0)).unwrap();
            let z = rtw_invariant(&zero, &ctx, &lim).unwrap();
            assert!((z.to_complex() - s1_s2(k)).norm() < 1e-10);
        }
    }

    #[test]
    fn level_cap() {
        let ctx = RootContext::new(7, Mode::Float);
        let p = SurgeryPresentation::new(Diagram::unknot(0)).unwrap();
        assert_eq!(
            rtw_invariant(&p, &ctx, &Limits { max_color: 7, ..Limits::default() }).unwrap_err(),
            Error::LevelOutOfRange { level: 7, max: 6 }
        );
    }
}
