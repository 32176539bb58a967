use qinv::algebra::LaurentPoly;
use qinv::cabling::{cable, colored_bracket, jones_wenzl, twist_eigenvalue, TlDiagram, TlElement};
use qinv::diagram::Diagram;
use qinv::skein::{bracket, state_sum};
use qinv::algebra::Symbolic;
use qinv::Limits;

fn q(m: u32) -> LaurentPoly {
    LaurentPoly::quantum_integer(m)
}

fn sign(e: u32) -> i128 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn projectors_are_idempotent_and_killed_by_generators() {
    for n in 1..=4 {
        let jw = jones_wenzl(n);
        let p = jw.element();
        assert!(p.compose(p).sub(p).is_zero(), "JW_{n} not idempotent");
        for i in 1..n {
            let e = TlElement::from_diagram(TlDiagram::generator(n, i));
            assert!(p.compose(&e).is_zero(), "JW_{n} e_{i} != 0");
            assert!(e.compose(p).is_zero(), "e_{i} JW_{n} != 0");
        }
    }
}

#[test]
fn second_projector_explicitly() {
    // JW_2 = 1 + e_1/[2] when loops are worth -[2]
    let jw = jones_wenzl(2);
    let terms = jw.cleared_terms();
    assert_eq!(jw.denominator(), &q(2));
    for (d, num) in terms {
        if d.is_identity() {
            assert_eq!(num, &q(2));
        } else {
            assert_eq!(d, &TlDiagram::generator(2, 1));
            assert_eq!(num, &LaurentPoly::one());
        }
    }
}

#[test]
fn colored_unknot_with_framing() {
    let lim = Limits::default();
    for n in 0..=3u32 {
        let base = q(n + 1).scale(sign(n));
        for f in -2..=2i64 {
            let v = colored_bracket(&Diagram::unknot(f), &[n], &lim).unwrap();
            let mut expect = base.clone();
            for _ in 0..f.unsigned_abs() {
                let t = twist_eigenvalue(n);
                expect = if f > 0 { &expect * &t } else { expect.div_exact(&t).unwrap() };
            }
            assert_eq!(v, expect, "n={n} f={f}");
            // explicit curls agree with the twist eigenvalue
            assert_eq!(cable(&Diagram::unknot(f), &[n], &lim).unwrap().bracket().unwrap(), expect);
        }
    }
}

#[test]
fn colored_hopf_closed_form() {
    let lim = Limits::default();
    let hopf = Diagram::from_braid(2, &[1, 1]);
    for n in 0..=2u32 {
        for m in 0..=2u32 {
            let expect = q((n + 1) * (m + 1)).scale(sign(n + m));
            assert_eq!(colored_bracket(&hopf, &[n, m], &lim).unwrap(), expect, "({n},{m})");
            assert_eq!(colored_bracket(&hopf.mirror(), &[n, m], &lim).unwrap(), expect);
        }
    }
}

fn fixtures() -> Vec<Diagram> {
    vec![
        Diagram::from_braid(2, &[1, 1]).with_framings(&[1, -2]),
        Diagram::from_braid(2, &[1, 1, 1]).with_framings(&[2]),
        Diagram::from_braid(3, &[1, -2, 1, -2]).with_framings(&[-1]),
        Diagram::from_braid(3, &[1, 1, 2, 2]).with_framings(&[0, 1, -1]),
    ]
}

#[test]
fn color_one_is_the_framed_bracket() {
    let lim = Limits::default();
    for d in fixtures() {
        let ones = vec![1; d.component_count()];
        let framed = d.with_blackboard_framing();
        assert_eq!(colored_bracket(&d, &ones, &lim).unwrap(), bracket(&framed, &lim).unwrap());
    }
}

#[test]
fn curls_match_twist_correction() {
    let lim = Limits::default();
    for d in fixtures() {
        let nc = d.component_count();
        let colors: Vec<u32> = (0..nc).map(|i| [2, 1, 2][i % 3]).collect();
        let c = cable(&d, &colors, &Limits { max_crossings: 200, ..lim }).unwrap();
        assert_eq!(c.bracket().unwrap(), colored_bracket(&d, &colors, &lim).unwrap());
    }
}

#[test]
fn framing_covariance() {
    let lim = Limits::default();
    for d in fixtures() {
        for n in 1..=3u32 {
            let mut colors = vec![1; d.component_count()];
            colors[0] = n;
            let before = colored_bracket(&d, &colors, &lim).unwrap();
            let mut bumped = d.clone();
            bumped.set_framing(0, d.components()[0].framing + 1);
            // draw the extra curl instead of trusting the scalar shortcut
            let drawn = bumped.with_blackboard_framing();
            let after = colored_bracket(&drawn, &colors, &Limits { max_crossings: 200, ..lim }).unwrap();
            assert_eq!(after, &before * &twist_eigenvalue(n));
        }
    }
}

#[test]
fn color_zero_components_are_invisible() {
    let lim = Limits::default();
    let chain = Diagram::from_braid(3, &[1, 1, 2, 2]).with_framings(&[1, -1, 2]);
    let full = colored_bracket(&chain, &[2, 0, 1], &lim).unwrap();
    let dropped = colored_bracket(&chain.sublink(&[0, 2]), &[2, 1], &lim).unwrap();
    assert_eq!(full, dropped);
}

#[test]
fn expansion_sums_to_the_bracket() {
    let lim = Limits::default();
    let hopf = Diagram::from_braid(2, &[1, 1]);
    let c = cable(&hopf, &[2, 1], &lim).unwrap();
    let mut total = LaurentPoly::zero();
    for (net, coeff) in c.expand() {
        total = total + &coeff * &state_sum(&net, &Symbolic);
    }
    assert_eq!(total.div_exact(c.denominator()).unwrap(), c.bracket().unwrap());
    let unknot = cable(&Diagram::unknot(0), &[2], &lim).unwrap();
    assert_eq!(unknot.expand().len(), 2);
}
