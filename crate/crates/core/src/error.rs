//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials belong to different rings ({0} vs {1})")]
    RingMismatch(String, String),

    #[error("monomial length mismatch ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("argument must be nonzero: {0}")]
    ZeroArgument(&'static str),

    #[error("local invariants do not sum to zero mod 1: {0}")]
    ReciprocityViolation(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("cannot factor {0} with the trial-division bound in use")]
    FactorizationLimit(String),

    #[error("infeasible class request: {0}")]
    InfeasibleClass(String),

    #[error("class has index {actual}, expected {expected}")]
    WrongIndex { expected: u64, actual: String },

    #[error("scheme has codimension {actual}, expected {expected}")]
    CodimensionMismatch { expected: u32, actual: i64 },

    #[error("pair budget of {0} exceeded in Buchberger loop")]
    PairBudgetExceeded(usize),

    #[error("no smooth model found after {0} attempts")]
    RetriesExhausted(u32),

    #[error("branch degree {0} is odd; a double cover needs an even branch divisor")]
    OddBranchDegree(i64),

    #[error("genus formula gives {0} < 0; the cover is disconnected or degenerate")]
    DegenerateCover(i64),

    #[error("invalid input: {0}")]
    BadInput(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
