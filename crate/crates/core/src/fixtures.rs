//! Named diagrams and move-equivalent presentation pairs used by the test
//! suites and the command-line self test.

use crate::diagram::Diagram;

pub fn unknot() -> Diagram {
    Diagram::unknot(0)
}

pub fn hopf() -> Diagram {
    Diagram::from_braid(2, &[1, 1])
}

/// Right-handed trefoil.
pub fn trefoil() -> Diagram {
    Diagram::from_braid(2, &[1, 1, 1])
}

pub fn figure_eight() -> Diagram {
    Diagram::from_braid(3, &[1, -2, 1, -2])
}

/// The (2,5) torus knot.
pub fn cinquefoil() -> Diagram {
    Diagram::from_braid(2, &[1, 1, 1, 1, 1])
}

pub fn six_two() -> Diagram {
    Diagram::from_braid(3, &[1, 1, 1, -2, 1, -2])
}

pub fn whitehead() -> Diagram {
    Diagram::from_braid(3, &[1, -2, 1, -2, -2])
}

pub fn borromean() -> Diagram {
    Diagram::from_braid(3, &[1, -2, 1, -2, 1, -2])
}

/// Closure of `(s1 s2^-1)^6`: a 12-crossing, 3-component alternating link.
pub fn twelve_crossing() -> Diagram {
    Diagram::from_braid(3, &[1, -2].repeat(6))
}

/// Every knot and link fixture, by name.
pub fn knots() -> Vec<(&'static str, Diagram)> {
    vec![
        ("unknot", unknot()),
        ("hopf", hopf()),
        ("trefoil", trefoil()),
        ("figure-eight", figure_eight()),
        ("cinquefoil", cinquefoil()),
        ("six-two", six_two()),
        ("whitehead", whitehead()),
        ("borromean", borromean()),
        ("twelve-crossing", twelve_crossing()),
    ]
}

/// Chain of unknots, each linking the next once, with the given framings.
pub fn chain(framings: &[i64]) -> Diagram {
    match framings.len() {
        0 => Diagram::empty(),
        1 => Diagram::unknot(framings[0]),
        n => {
            let word: Vec<i32> = (1..n as i32).flat_map(|i| [i, i]).collect();
            Diagram::from_braid(n, &word).with_framings(framings)
        }
    }
}

/// Lens space `L(p,1)` as a `-p` framed unknot.
pub fn lens_unknot(p: i64) -> Diagram {
    Diagram::unknot(-p)
}

/// `L(p,1)` after blowing up a `-1` meridian: framings `-p-1, -1`.
pub fn lens_chain(p: i64) -> Diagram {
    chain(&[-p - 1, -1])
}

/// Right trefoil with framing `f` together with a 0-framed meridian.
pub fn trefoil_with_meridian(f: i64) -> Diagram {
    Diagram::from_braid(3, &[1, 1, 1, 2, 2]).with_framings(&[f, 0])
}

/// Surgery presentations on which blow-ups are checked.
pub fn surgery_presentations() -> Vec<(&'static str, Diagram)> {
    vec![
        ("empty", Diagram::empty()),
        ("unknot+1", Diagram::unknot(1)),
        ("unknot0", Diagram::unknot(0)),
        ("lens-3-1", lens_unknot(3)),
        ("trefoil+1", trefoil().with_framings(&[1])),
        ("trefoil-1", trefoil().with_framings(&[-1])),
        ("hopf-2-0", hopf().with_framings(&[2, 0])),
    ]
}

/// Pairs of surgery presentations of the same 3-manifold.
pub fn surgery_pairs() -> Vec<(&'static str, Diagram, Diagram)> {
    let mut pairs: Vec<(&'static str, Diagram, Diagram)> = vec![
        ("lens-2-1 chain", lens_unknot(2), lens_chain(2)),
        ("lens-3-1 chain", lens_unknot(3), lens_chain(3)),
        ("lens-4-1 chain", lens_unknot(4), lens_chain(4)),
        ("hopf slide", hopf().with_framings(&[0, 0]), hopf().with_framings(&[2, 0])),
        ("hopf 0-framed is the sphere", hopf().with_framings(&[0, 0]), Diagram::empty()),
        ("trefoil with meridian", trefoil_with_meridian(1), Diagram::empty()),
    ];
    pairs.push(("sphere", Diagram::empty(), Diagram::unknot(1)));
    pairs
}

/// Pairs of special links presenting the same 4-manifold.
pub fn fourd_pairs() -> Vec<(&'static str, Diagram, Diagram)> {
    let cancel = hopf().with_dotted(0);
    vec![
        ("empty", Diagram::empty(), Diagram::empty()),
        ("CP2 with cancelling pair", Diagram::unknot(1), Diagram::unknot(1).disjoint_union(&cancel)),
        ("S1xS3 with cancelling pair", Diagram::unknot(0).with_dotted(0), Diagram::unknot(0).with_dotted(0).disjoint_union(&cancel)),
        ("CP2 through a one-handle", Diagram::unknot(1), chain(&[0, 0, 1]).with_dotted(1)),
        ("S2xS2 slide", hopf().with_framings(&[0, 0]), hopf().with_framings(&[2, 0])),
        ("CP2#CP2bar", hopf().with_framings(&[1, 0]), Diagram::unknot(1).disjoint_union(&Diagram::unknot(-1))),
    ]
}
