pub mod algebra;
pub mod cabling;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod fourman;
pub mod rtw;
pub mod skein;

pub use error::{Error, Result};

/// Caps that keep exponential computations bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest crossing count of a diagram, or of a cabled diagram.
    pub max_crossings: usize,
    /// Largest color accepted on any component.
    pub max_color: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_crossings: 64, max_color: 5 }
    }
}
