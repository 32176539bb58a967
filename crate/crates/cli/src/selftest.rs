//! Named self-test suites run by `qinv selftest`.

use std::time::Instant;

use qinv::algebra::{LaurentPoly, Mode};
use qinv::cabling::{colored_bracket, jones_wenzl, twist_eigenvalue, TlDiagram, TlElement};
use qinv::diagram::{signature_nullity, Diagram, LinkingMatrix};
use qinv::fixtures;
use qinv::fourman::{fourman_equiv_check, SpecialLink};
use qinv::rtw::{kirby_equiv_check, SurgeryPresentation};
use qinv::skein::{bracket, bracket_bruteforce, jones, skein_residual, skein_triple, BRUTEFORCE_MAX_CROSSINGS};
use qinv::Limits;

use crate::{Failure, Outcome};

type Check = Result<(), String>;

/// Name, description and body of a suite.
type Suite = (&'static str, &'static str, fn() -> Check);

const SUITES: &[Suite] = &[
    ("bracket-oracle", "state sum against exhaustive state enumeration on every fixture", bracket_oracle),
    ("skein", "skein relation at every crossing of the knot fixtures", skein),
    ("jones-mirror", "mirror image inverts t in the Jones polynomial", jones_mirror),
    ("jw-projectors", "Jones-Wenzl projectors are idempotent and killed by cups, n <= 4", jw_projectors),
    ("colored-unknot", "framed colored unknots match the twist eigenvalue formula, n <= 3", colored_unknot),
    ("kirby-blowup", "blow-up invariance of the surgery invariant, k <= 3", kirby_blowup),
    ("kirby-slides", "surgery presentations of the same manifold agree, k <= 3", kirby_slides),
    ("fourman-pairs", "special links of the same 4-manifold agree, k <= 2", fourman_pairs),
    ("signature", "inertia of hand-checked linking matrices", signature),
];

fn wide() -> Limits {
    Limits { max_crossings: 256, max_color: 6 }
}

fn bracket_oracle() -> Check {
    for (name, d) in fixtures::knots() {
        if d.crossing_count() > BRUTEFORCE_MAX_CROSSINGS {
            continue;
        }
        let fast = bracket(&d, &Limits::default()).map_err(|e| format!("{name}: {e}"))?;
        let slow = bracket_bruteforce(&d).map_err(|e| format!("{name}: {e}"))?;
        if fast != slow {
            return Err(format!("{name}: {fast} != {slow}"));
        }
    }
    Ok(())
}

fn skein() -> Check {
    for name in ["trefoil", "figure-eight", "whitehead", "borromean"] {
        let d = fixtures::knots().into_iter().find(|(n, _)| *n == name).unwrap().1;
        for site in 0..d.crossing_count() {
            let (p, m, z) = skein_triple(&d, site);
            let check = skein_residual(&p, &m, &z, &Limits::default()).map_err(|e| e.to_string())?;
            if !check.holds() {
                return Err(format!("{name} site {}: residual {}", site + 1, check.residual));
            }
        }
    }
    Ok(())
}

fn jones_mirror() -> Check {
    for (name, d) in fixtures::knots() {
        let v = jones(&d, &Limits::default()).map_err(|e| e.to_string())?;
        let w = jones(&d.mirror(), &Limits::default()).map_err(|e| e.to_string())?;
        if w != v.bar() {
            return Err(format!("{name}: {w} is not the conjugate of {v}"));
        }
    }
    Ok(())
}

fn jw_projectors() -> Check {
    for n in 1..=4 {
        let p = jones_wenzl(n);
        let p = p.element();
        if !p.compose(p).sub(p).is_zero() {
            return Err(format!("JW_{n} is not idempotent"));
        }
        for i in 1..n {
            let e = TlElement::from_diagram(TlDiagram::generator(n, i));
            if !p.compose(&e).is_zero() || !e.compose(p).is_zero() {
                return Err(format!("JW_{n} is not killed by e_{i}"));
            }
        }
    }
    Ok(())
}

fn colored_unknot() -> Check {
    for n in 0..=3u32 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let base = LaurentPoly::quantum_integer(n + 1).scale(sign);
        for f in -2i64..=2 {
            let got = colored_bracket(&Diagram::unknot(f), &[n], &Limits::default()).map_err(|e| e.to_string())?;
            let twist = if f >= 0 {
                twist_eigenvalue(n).pow(f as u32)
            } else {
                twist_eigenvalue(n).bar().pow((-f) as u32)
            };
            if got != &twist * &base {
                return Err(format!("color {n} framing {f}: {got}"));
            }
        }
    }
    Ok(())
}

fn check_pair(name: &str, a: &Diagram, b: &Diagram, levels: &[u32]) -> Check {
    let p1 = SurgeryPresentation::new(a.clone()).map_err(|e| e.to_string())?;
    let p2 = SurgeryPresentation::new(b.clone()).map_err(|e| e.to_string())?;
    let report = kirby_equiv_check(&p1, &p2, levels, Mode::Exact, 1e-9, &wide()).map_err(|e| format!("{name}: {e}"))?;
    if report.equivalent() {
        Ok(())
    } else {
        Err(format!("{name}:\n{report}"))
    }
}

fn kirby_blowup() -> Check {
    for (name, d) in fixtures::surgery_presentations() {
        for sign in [1, -1] {
            check_pair(name, &d, &d.blow_up(sign), &[1, 2, 3])?;
        }
    }
    Ok(())
}

fn kirby_slides() -> Check {
    for (name, a, b) in fixtures::surgery_pairs() {
        check_pair(name, &a, &b, &[1, 2, 3])?;
    }
    Ok(())
}

fn fourman_pairs() -> Check {
    for (name, a, b) in fixtures::fourd_pairs() {
        let s1 = SpecialLink::new(a).map_err(|e| e.to_string())?;
        let s2 = SpecialLink::new(b).map_err(|e| e.to_string())?;
        let report =
            fourman_equiv_check(&s1, &s2, &[1, 2], Mode::Exact, 1e-9, &wide()).map_err(|e| format!("{name}: {e}"))?;
        if !report.equivalent() {
            return Err(format!("{name}:\n{report}"));
        }
    }
    Ok(())
}

fn signature() -> Check {
    let cases = [
        (vec![vec![1, 2], vec![2, 1]], (1, 1, 0)),
        (vec![vec![0, 1], vec![1, 0]], (1, 1, 0)),
        (vec![vec![0, 0], vec![0, 0]], (0, 0, 2)),
        (vec![vec![-4, 1], vec![1, -1]], (0, 2, 0)),
        (vec![vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, -3]], (1, 1, 1)),
    ];
    for (rows, (p, n, z)) in cases {
        let i = signature_nullity(&LinkingMatrix::from_rows(&rows));
        if (i.positive, i.negative, i.nullity) != (p, n, z) {
            return Err(format!("{rows:?}: got b+={} b-={} nu={}", i.positive, i.negative, i.nullity));
        }
    }
    Ok(())
}

pub(crate) fn run(names: &[String]) -> Outcome {
    if names.len() == 1 && names[0] == "list" {
        return Ok(SUITES.iter().map(|(name, about, _)| format!("{name:<16} {about}")).collect());
    }
    let chosen: Vec<_> = if names.is_empty() {
        SUITES.iter().collect()
    } else {
        names
            .iter()
            .map(|n| {
                SUITES
                    .iter()
                    .find(|(name, _, _)| name == n)
                    .ok_or_else(|| Failure::input(format!("unknown suite `{n}`; try `qinv selftest list`")))
            })
            .collect::<Result<_, _>>()?
    };
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, _, suite) in chosen {
        let start = Instant::now();
        let result = suite();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => lines.push(format!("PASS {name} ({ms} ms)")),
            Err(why) => {
                ok = false;
                lines.push(format!("FAIL {name} ({ms} ms): {why}"));
            }
        }
    }
    lines.push(format!("RESULT selftest {}", if ok { "ok" } else { "fail" }));
    if ok {
        Ok(lines)
    } else {
        Err(Failure::computation(lines.join("\n")))
    }
}
