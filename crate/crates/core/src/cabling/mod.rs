//! Colored framed link invariants by cabling with Jones-Wenzl projectors.
//!
//! A component of color `n` is replaced by `n` parallel blackboard copies
//! with one `JW_n` inserted. Each crossing becomes an `n_under x n_over`
//! grid; color 0 components disappear.

mod jw;
mod tl;

use std::collections::BTreeMap;

pub use jw::{jones_wenzl, JonesWenzl};
pub use tl::{RatFunc, TlDiagram, TlElement};

use crate::algebra::{ComplexRing, Folded, LaurentPoly, Mode, RootContext, RootScalar, Symbolic};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::skein::{state_sum, BoxTerm, Node, PlanarNetwork};
use crate::Limits;

/// A cabled diagram: its bracket is `state_sum(network) / denominator`.
#[derive(Debug, Clone)]
pub struct Cable {
    network: PlanarNetwork,
    denominator: LaurentPoly,
}

impl Cable {
    pub fn network(&self) -> &PlanarNetwork {
        &self.network
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn crossing_count(&self) -> usize {
        self.network.crossing_count()
    }

    /// Bracket of the cable as an exact Laurent polynomial.
    pub fn bracket(&self) -> Result<LaurentPoly> {
        state_sum(&self.network, &Symbolic).div_exact(&self.denominator).ok_or(Error::NonPolynomial)
    }

    /// Replaces every projector by its terms: a formal sum of crossing-only
    /// networks with numerators over the common [`Cable::denominator`].
    pub fn expand(&self) -> Vec<(PlanarNetwork, LaurentPoly)> {
        let boxes: Vec<(&[usize], &[BoxTerm])> = self
            .network
            .nodes
            .iter()
            .filter_map(|n| match n {
                Node::Box { slots, terms } => Some((slots.as_slice(), terms.as_slice())),
                Node::Crossing(_) => None,
            })
            .collect();
        let crossings: Vec<[usize; 4]> = self
            .network
            .nodes
            .iter()
            .filter_map(|n| match n {
                Node::Crossing(e) => Some(*e),
                Node::Box { .. } => None,
            })
            .collect();
        let mut choice = vec![0usize; boxes.len()];
        let mut out = Vec::new();
        loop {
            let mut unions = Vec::new();
            let mut coeff = LaurentPoly::one();
            for ((slots, terms), &c) in boxes.iter().zip(&choice) {
                let term = &terms[c];
                coeff = &coeff * &term.coeff;
                for (i, &j) in term.pairing.iter().enumerate() {
                    if i < j {
                        unions.push((slots[i], slots[j]));
                    }
                }
            }
            let nodes: Vec<Vec<usize>> = crossings.iter().map(|e| e.to_vec()).collect();
            let (nodes, edge_count, loops) = relabel(self.network.edge_count, &unions, nodes);
            let nodes = nodes.into_iter().map(|s| Node::Crossing([s[0], s[1], s[2], s[3]])).collect();
            out.push((PlanarNetwork { nodes, edge_count, free_loops: loops + self.network.free_loops }, coeff));
            // advance the mixed-radix counter over box terms
            let mut i = 0;
            while i < boxes.len() {
                choice[i] += 1;
                if choice[i] < boxes[i].1.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == boxes.len() {
                break;
            }
        }
        out
    }
}

/// `theta_n = (-1)^n A^{n(n+2)}`, the eigenvalue of a positive full twist
/// on a color `n` strand.
pub fn twist_eigenvalue(n: u32) -> LaurentPoly {
    twist_power(n, 1)
}

fn twist_power(n: u32, e: i64) -> LaurentPoly {
    let n = n as i64;
    let sign = if (n * e).rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, n * (n + 2) * e)
}

fn check_colors(d: &Diagram, colors: &[u32], max: u32) -> Result<()> {
    if colors.len() != d.component_count() {
        return Err(Error::ColorCount { expected: d.component_count(), got: colors.len() });
    }
    if let Some(&color) = colors.iter().find(|&&c| c > max) {
        return Err(Error::ColorOutOfRange { color, max });
    }
    Ok(())
}

fn check_size(d: &Diagram, colors: &[u32], limits: &Limits) -> Result<()> {
    let actual: usize = d
        .crossing_components()
        .iter()
        .map(|&(u, o)| colors[u] as usize * colors[o] as usize)
        .sum();
    if actual > limits.max_crossings {
        return Err(Error::ResourceLimit { what: "cabled crossing count", actual, limit: limits.max_crossings });
    }
    Ok(())
}

/// Cable of `d` with framings realized by explicit curls.
pub fn cable(d: &Diagram, colors: &[u32], limits: &Limits) -> Result<Cable> {
    check_colors(d, colors, limits.max_color)?;
    let framed = d.with_blackboard_framing();
    check_size(&framed, colors, limits)?;
    Ok(build(&framed, colors))
}

/// Framing correction `prod theta_{n_i}^{f_i - w_i}` relative to the
/// blackboard framing of the drawn diagram.
fn framing_correction(d: &Diagram, colors: &[u32]) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for (i, (c, &n)) in d.components().iter().zip(colors).enumerate() {
        let e = c.framing - d.self_writhe(i);
        if n > 0 && e != 0 {
            out = &out * &twist_power(n, e);
        }
    }
    out
}

/// Colored bracket `<L; n_1, ..., n_N>` of the framed link for generic `A`.
///
/// Framing curls are not drawn; each one would multiply the cable by the
/// twist eigenvalue, so the correction is applied as that scalar.
pub fn colored_bracket(d: &Diagram, colors: &[u32], limits: &Limits) -> Result<LaurentPoly> {
    check_colors(d, colors, limits.max_color)?;
    check_size(d, colors, limits)?;
    let cable = build(d, colors);
    Ok(&cable.bracket()? * &framing_correction(d, colors))
}

/// Colored bracket evaluated at the level-`k` root of unity. Colors above
/// `k` are rejected because their projectors are undefined there.
pub fn colored_bracket_at(d: &Diagram, colors: &[u32], ctx: &RootContext, limits: &Limits) -> Result<RootScalar> {
    if let Some(&color) = colors.iter().find(|&&c| c > ctx.level()) {
        return Err(Error::ColorOutOfRange { color, max: ctx.level() });
    }
    check_colors(d, colors, limits.max_color)?;
    check_size(d, colors, limits)?;
    let cable = build(d, colors);
    let den = ctx.eval(cable.denominator());
    let twist = ctx.eval(&framing_correction(d, colors));
    let raw = match ctx.mode() {
        Mode::Exact => {
            let ring = Folded::new(ctx);
            ring.to_scalar(&state_sum(cable.network(), &ring))
        }
        Mode::Float => RootScalar::Float(state_sum(cable.network(), &ComplexRing::new(ctx))),
    };
    let value = raw.checked_div(&den).expect("projector denominators are nonzero at admissible colors");
    Ok(&value * &twist)
}

fn build(d: &Diagram, colors: &[u32]) -> Cable {
    let owner = d.arc_owner();
    let color_of = |a: u32| colors[owner[&a]] as usize;
    let mut next = 0usize;
    let mut base: BTreeMap<u32, usize> = BTreeMap::new();
    let mut top: BTreeMap<u32, usize> = BTreeMap::new();
    for (c, &n) in d.components().iter().zip(colors) {
        for &a in &c.arcs {
            base.insert(a, next);
            next += n as usize;
        }
        if n >= 2 {
            if let Some(&a0) = c.arcs.first() {
                top.insert(a0, next);
                next += n as usize;
            }
        }
    }
    // strand s of arc a where a enters its head crossing / leaves its tail
    let e_in = |a: u32, s: usize| top.get(&a).unwrap_or(&base[&a]) + s;
    let e_out = |a: u32, s: usize| base[&a] + s;
    let mut unions: Vec<(usize, usize)> = Vec::new();
    let mut nodes: Vec<Vec<usize>> = Vec::new();
    let mut boxes: Vec<Vec<usize>> = Vec::new();
    for x in d.crossings() {
        let (ua, uc) = x.under();
        let (oi, oo) = x.over();
        let (nu, no) = (color_of(ua), color_of(oi));
        if no == 0 {
            unions.extend((0..nu).map(|j| (e_in(ua, j), e_out(uc, j))));
            continue;
        }
        if nu == 0 {
            unions.extend((0..no).map(|s| (e_in(oi, s), e_out(oo, s))));
            continue;
        }
        // The under bundle runs upward with strand j in column j; the over
        // bundle runs right-to-left when it enters at slot b.
        let leftward = x.over_in_slot() == 1;
        let vbase = next;
        next += nu * (no - 1);
        let hbase = next;
        next += no * (nu - 1);
        let seg = |j: usize, k: usize| match k {
            0 => e_in(ua, j),
            k if k == no => e_out(uc, j),
            k => vbase + j * (no - 1) + k - 1,
        };
        let strand = |k: usize| if leftward { k } else { no - 1 - k };
        let h = |k: usize, j: usize| match j {
            0 if leftward => e_out(oo, strand(k)),
            0 => e_in(oi, strand(k)),
            j if j == nu && leftward => e_in(oi, strand(k)),
            j if j == nu => e_out(oo, strand(k)),
            j => hbase + k * (nu - 1) + j - 1,
        };
        for j in 0..nu {
            for k in 0..no {
                nodes.push(vec![seg(j, k), h(k, j + 1), seg(j, k + 1), h(k, j)]);
            }
        }
    }
    let mut denominator = LaurentPoly::one();
    let mut box_terms = Vec::new();
    for (c, &n) in d.components().iter().zip(colors) {
        let n = n as usize;
        if n == 0 {
            continue;
        }
        let slots: Vec<usize> = match c.arcs.first() {
            Some(&a0) => (0..n).map(|i| e_out(a0, i)).chain((0..n).map(|i| e_in(a0, i))).collect(),
            None => {
                let ids: Vec<usize> = (next..next + n).collect();
                next += n;
                ids.iter().chain(&ids).copied().collect()
            }
        };
        if n >= 2 {
            let jw = jones_wenzl(n);
            denominator = &denominator * jw.denominator();
            box_terms.push(
                jw.cleared_terms()
                    .iter()
                    .map(|(t, p)| BoxTerm { pairing: t.pairing().to_vec(), coeff: p.clone() })
                    .collect::<Vec<_>>(),
            );
            boxes.push(slots);
        }
    }
    let crossing_count = nodes.len();
    nodes.extend(boxes);
    let (nodes, edge_count, free_loops) = relabel(next, &unions, nodes);
    let mut terms = box_terms.into_iter();
    let nodes = nodes
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            if i < crossing_count {
                Node::Crossing([s[0], s[1], s[2], s[3]])
            } else {
                Node::Box { slots: s, terms: terms.next().unwrap() }
            }
        })
        .collect();
    Cable { network: PlanarNetwork { nodes, edge_count, free_loops }, denominator }
}

/// Merges edge ids joined by `unions`, renumbers the classes that touch a
/// node consecutively, and counts the remaining classes as free loops.
fn relabel(ids: usize, unions: &[(usize, usize)], nodes: Vec<Vec<usize>>) -> (Vec<Vec<usize>>, usize, usize) {
    let mut parent: Vec<usize> = (0..ids).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for &(a, b) in unions {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut label: Vec<Option<usize>> = vec![None; ids];
    let mut count = 0;
    let nodes: Vec<Vec<usize>> = nodes
        .into_iter()
        .map(|slots| {
            slots
                .into_iter()
                .map(|e| {
                    let r = find(&mut parent, e);
                    *label[r].get_or_insert_with(|| {
                        count += 1;
                        count - 1
                    })
                })
                .collect()
        })
        .collect();
    let classes = (0..ids).filter(|&i| find(&mut parent, i) == i).count();
    (nodes, count, classes - count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u32) -> LaurentPoly {
        LaurentPoly::quantum_integer(m)
    }

    #[test]
    fn colored_unknots() {
        let lim = Limits::default();
        for n in 0..=4u32 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let v = colored_bracket(&Diagram::unknot(0), &[n], &lim).unwrap();
            assert_eq!(v, q(n + 1).scale(sign), "n = {n}");
        }
    }

    #[test]
    fn cable_of_plain_unknot() {
        let c = cable(&Diagram::unknot(0), &[1], &Limits::default()).unwrap();
        assert_eq!(c.crossing_count(), 0);
        assert_eq!(c.bracket().unwrap(), LaurentPoly::delta());
        let c = cable(&Diagram::unknot(1), &[1], &Limits::default()).unwrap();
        assert_eq!(c.bracket().unwrap(), &LaurentPoly::monomial(-1, 3) * &LaurentPoly::delta());
    }

    #[test]
    fn color_checks() {
        let lim = Limits::default();
        assert_eq!(
            colored_bracket(&Diagram::unknot(0), &[6], &lim),
            Err(Error::ColorOutOfRange { color: 6, max: 5 })
        );
        assert_eq!(colored_bracket(&Diagram::unknot(0), &[1, 1], &lim), Err(Error::ColorCount { expected: 1, got: 2 }));
        let ctx = RootContext::new(2, Mode::Exact);
        assert!(matches!(
            colored_bracket_at(&Diagram::unknot(0), &[3], &ctx, &lim),
            Err(Error::ColorOutOfRange { color: 3, max: 2 })
        ));
    }
}
