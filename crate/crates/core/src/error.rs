//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by ring construction, parsing, and the algebraic pipelines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("generator is not homogeneous for the ring's multigrading")]
    NonHomogeneous,

    #[error("the multigrading admits no heft vector")]
    NoHeftVector,

    #[error("the quotient ring is not finite-dimensional")]
    InfiniteQuotient,

    #[error("degenerate ideal: {0}")]
    DegenerateIdeal(String),

    #[error("generator is not a monomial")]
    NonMonomialGenerator,

    #[error("image bidegree does not match generator bidegree")]
    BidegreeMismatch,

    #[error("unsupported substitution shape: {0}")]
    UnsupportedSubstitution(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
