//! Shared error type for all exact-arithmetic and algorithm layers.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the configured cap {1}")]
    ConductorOverflow(u128, u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("monomial input has empty zero set in the torus")]
    MonomialInput,
    #[error("zero vector not allowed here")]
    ZeroVector,
    #[error("matrix rows are linearly dependent")]
    DependentRows,
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unsupported number of variables: {0}")]
    UnsupportedArity(usize),
    #[error("gcd certification failed for every admissible iterate; this contradicts the two-term factorization law")]
    LemmaViolation,
    #[error("enumeration limit exceeded: {0}")]
    ArityLimit(String),
    #[error("integer size cap exceeded: {0}")]
    Overflow(String),
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
