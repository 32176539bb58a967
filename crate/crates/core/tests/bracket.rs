use proptest::prelude::*;
use qinv::diagram::Diagram;
use qinv::skein::{bracket, bracket_bruteforce, jones, TPolynomial};
use qinv::Limits;

fn braid_word() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|s| {
        let gen = (1..s as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        (Just(s), prop::collection::vec(gen, 0..=8))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn frontier_sum_matches_exhaustive_sum((strands, word) in braid_word()) {
        let d = Diagram::from_braid(strands, &word);
        prop_assert_eq!(bracket(&d, &Limits::default()).unwrap(), bracket_bruteforce(&d).unwrap());
    }
}

#[test]
fn knot_determinants() {
    // |V(-1)| for the standard small knots and links
    let cases: [(usize, &[i32], i128); 6] = [
        (2, &[1, 1, 1], 3),
        (3, &[1, -2, 1, -2], 5),
        (2, &[1, 1, 1, 1, 1], 5),
        (3, &[1, 1, 1, -2, 1, -2], 11),
        (3, &[1, -2, 1, -2, -2], 8),
        (3, &[1, -2, 1, -2, 1, -2], 16),
    ];
    for (s, w, det) in cases {
        let v = jones(&Diagram::from_braid(s, w), &Limits::default()).unwrap();
        // t = -1 means A^4 = -1; take A = exp(i pi/4)
        let val = v.eval_complex(num_complex::Complex64::from_polar(1.0, std::f64::consts::PI / 4.0));
        assert!((val.norm() - det as f64).abs() < 1e-9, "{w:?}: {val}");
    }
    let fig8 = jones(&Diagram::from_braid(3, &[1, -2, 1, -2]), &Limits::default()).unwrap();
    assert_eq!(TPolynomial(fig8).to_string(), "1*t^-2 + -1*t^-1 + 1 + -1*t^1 + 1*t^2");
}
