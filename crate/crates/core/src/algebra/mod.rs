//! Exact Laurent-polynomial and cyclotomic arithmetic.

mod cyclotomic;
mod laurent;
mod ring;
mod root;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use laurent::LaurentPoly;
pub use ring::{ComplexRing, Folded, Ring, Symbolic};
pub use root::{format_complex, scalar_power, Mode, RootContext, RootScalar, DEFAULT_TOLERANCE};

/// `[m]`, either as a Laurent polynomial or specialized at a root.
pub fn quantum_integer(m: u32) -> LaurentPoly {
    LaurentPoly::quantum_integer(m)
}
