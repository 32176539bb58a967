use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("invalid diagram: {0}")]
    Validation(String),

    #[error("resource limit exceeded: {what} is {actual}, limit {limit}")]
    ResourceLimit { what: &'static str, actual: usize, limit: usize },

    #[error("color {color} out of range (maximum {max})")]
    ColorOutOfRange { color: u32, max: u32 },

    #[error("level {level} out of range (maximum {max})")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("expected {expected} colors, got {got}")]
    ColorCount { expected: usize, got: usize },

    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    #[error("no exact square root in the cyclotomic ring")]
    InexactHalfPower,

    #[error("exponent {0} is not an integer or half-integer")]
    InvalidExponent(String),

    #[error("not a skein triple: {0}")]
    SiteMismatch(String),

    #[error("normalizing factor {0} vanishes at this level")]
    DegenerateNormalizer(&'static str),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("colored bracket did not reduce to a Laurent polynomial")]
    NonPolynomial,

    #[error("diagram has no components")]
    EmptyDiagram,
}

pub type Result<T> = std::result::Result<T, Error>;
