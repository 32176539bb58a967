//! Jones-Wenzl projectors.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::tl::{RatFunc, TlDiagram, TlElement};
use crate::algebra::LaurentPoly;

/// The projector on `n` strands, with its coefficients also written over a
/// common denominator.
#[derive(Debug)]
pub struct JonesWenzl {
    element: TlElement,
    cleared: Vec<(TlDiagram, LaurentPoly)>,
    denominator: LaurentPoly,
}

impl JonesWenzl {
    pub fn strands(&self) -> usize {
        self.element.strands()
    }

    pub fn element(&self) -> &TlElement {
        &self.element
    }

    /// Terms `(diagram, numerator)` sharing [`JonesWenzl::denominator`].
    pub fn cleared_terms(&self) -> &[(TlDiagram, LaurentPoly)] {
        &self.cleared
    }

    /// Product of quantum integers `[m]`, `m <= n`.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    fn build(element: TlElement) -> Self {
        let n = element.strands();
        let den: Vec<u32> =
            (1..=n.max(1)).map(|m| element.terms().iter().map(|(_, c)| c.den_exponent(m)).max().unwrap_or(0)).collect();
        let cleared = element.terms().iter().map(|(d, c)| (d.clone(), c.numerator_over(&den))).collect();
        let denominator = RatFunc::one().numerator_over(&den);
        Self { element, cleared, denominator }
    }
}

fn recurse(prev: &TlElement) -> TlElement {
    let n = prev.strands() + 1;
    let x = prev.tensor_id();
    if n == 1 {
        return x;
    }
    let e = TlElement::from_diagram(TlDiagram::generator(n, n - 1));
    // with loop value -[2] the correction enters with a plus sign
    let coeff = RatFunc::from_poly(LaurentPoly::quantum_integer(n as u32 - 1)).over_qint(n);
    x.add(&x.compose(&e).compose(&x).scale(&coeff))
}

/// `JW_n`, computed once per `n` and shared.
pub fn jones_wenzl(n: usize) -> Arc<JonesWenzl> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<JonesWenzl>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(jw) = cache.lock().unwrap().get(&n) {
        return Arc::clone(jw);
    }
    let element = if n == 0 {
        TlElement::from_diagram(TlDiagram::identity(0))
    } else {
        recurse(jones_wenzl(n - 1).element())
    };
    let jw = Arc::new(JonesWenzl::build(element));
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(jw))
}
