//! Invariant of closed 4-manifolds presented by special links: dotted
//! circles are one-handles, undotted framed components two-handles.

use num_rational::Ratio;

use crate::algebra::{scalar_power, Mode, RootContext, RootScalar};
use crate::diagram::{linking_matrix, signature_nullity, Diagram};
use crate::error::{Error, Result};
use crate::rtw::{compare, omega_insert, omega_weights, EquivalenceReport, Insertion, Parity, MAX_LEVEL};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialLink {
    diagram: Diagram,
}

impl SpecialLink {
    pub fn new(diagram: Diagram) -> Result<Self> {
        if let Some(c) = diagram.components().iter().find(|c| c.barred) {
            return Err(Error::InvalidPresentation(format!("component {} is barred; special links have none", c.id)));
        }
        Ok(Self { diagram })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn undotted_count(&self) -> usize {
        self.diagram.components().iter().filter(|c| !c.dotted).count()
    }

    pub fn dotted_count(&self) -> usize {
        self.diagram.components().iter().filter(|c| c.dotted).count()
    }

    /// Nullity of the linking matrix of all components.
    pub fn nullity(&self) -> usize {
        signature_nullity(&linking_matrix(&self.diagram)).nullity
    }
}

/// `<omega+_H omega_Hdot>` on the 0-framed Hopf link: even colors on `H`,
/// all colors on the dotted component.
pub fn hopf_block(ctx: &RootContext, limits: &Limits) -> Result<RootScalar> {
    let hopf = Diagram::from_braid(2, &[1, 1]).with_dotted(1);
    let slots = [Insertion::Omega(omega_weights(ctx, Parity::Even)), Insertion::Omega(omega_weights(ctx, Parity::All))];
    omega_insert(&hopf, &slots, ctx, limits)
}

/// Result of the 4-manifold invariant. When the Hopf normalizer needs a
/// square root that the cyclotomic field does not contain, the value is
/// computed in floating point with the principal branch and
/// `float_fallback` is set.
#[derive(Debug, Clone)]
pub struct BrodaValue {
    pub value: RootScalar,
    pub nullity: usize,
    /// Exponent `(N + Ndot - nu)/2` of the Hopf normalizer.
    pub hopf_exponent: Ratio<i64>,
    pub float_fallback: bool,
}

fn nonzero(x: &RootScalar, ctx: &RootContext, name: &'static str) -> Result<()> {
    let zero = match x {
        RootScalar::Exact(c) => c.is_zero(),
        RootScalar::Float(_) => x.is_negligible(ctx.tolerance()),
    };
    if zero {
        Err(Error::DegenerateNormalizer(name))
    } else {
        Ok(())
    }
}

pub fn broda_invariant(s: &SpecialLink, ctx: &RootContext, limits: &Limits) -> Result<BrodaValue> {
    if ctx.level() > MAX_LEVEL {
        return Err(Error::LevelOutOfRange { level: ctx.level(), max: MAX_LEVEL });
    }
    let even = omega_weights(ctx, Parity::Even);
    let all = omega_weights(ctx, Parity::All);
    let slots: Vec<Insertion> = s
        .diagram
        .components()
        .iter()
        .map(|c| Insertion::Omega(if c.dotted { all.clone() } else { even.clone() }))
        .collect();
    let numerator = omega_insert(&s.diagram, &slots, ctx, limits)?;
    let nullity = s.nullity();
    let unknot = omega_insert(&Diagram::unknot(0), &[Insertion::Omega(even)], ctx, limits)?;
    let hopf = hopf_block(ctx, limits)?;
    let hopf_exponent = Ratio::new((s.undotted_count() + s.dotted_count()) as i64 - nullity as i64, 2);
    if nullity > 0 {
        nonzero(&unknot, ctx, "<omega+ on the unknot>")?;
    }
    if *hopf_exponent.numer() != 0 {
        nonzero(&hopf, ctx, "Hopf block")?;
    }
    let unknot_part = scalar_power(&unknot, Ratio::from_integer(nullity as i64), ctx)?;
    let (hopf_part, float_fallback) = match scalar_power(&hopf, hopf_exponent, ctx) {
        Ok(v) => (v, false),
        Err(Error::InexactHalfPower) => (scalar_power(&hopf, hopf_exponent, &ctx.with_mode(Mode::Float))?, true),
        Err(e) => return Err(e),
    };
    let den = &unknot_part * &hopf_part;
    let value = numerator.checked_div(&den).ok_or(Error::DegenerateNormalizer("denominator"))?;
    let value = if float_fallback { value.to_float() } else { value };
    Ok(BrodaValue { value, nullity, hopf_exponent, float_fallback })
}

pub fn fourman_equiv_check(
    s1: &SpecialLink,
    s2: &SpecialLink,
    levels: &[u32],
    mode: Mode,
    tolerance: f64,
    limits: &Limits,
) -> Result<EquivalenceReport> {
    let mut rows = Vec::with_capacity(levels.len());
    for &k in levels {
        let ctx = RootContext::new(k, mode).with_tolerance(tolerance);
        let a = broda_invariant(s1, &ctx, limits)?.value;
        let b = broda_invariant(s2, &ctx, limits)?.value;
        rows.push(compare(k, a, b, tolerance));
    }
    Ok(EquivalenceReport { rows })
}
