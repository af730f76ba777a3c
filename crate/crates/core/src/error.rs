use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable {0} is not bound by the substitution")]
    UnboundVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("series truncation caps differ: {0:?} vs {1:?}")]
    CapMismatch(Vec<u32>, Vec<u32>),
    #[error("exponential requires a series with zero constant term")]
    ExpOfUnit,
    #[error("inverse requires a nonzero rational constant term")]
    NotInvertible,
    #[error("univariate series given to order {given}, composition needs order {required}")]
    InsufficientOrder { given: usize, required: usize },
    #[error("coefficient index {index:?} exceeds truncation caps {caps:?}")]
    IndexBeyondCaps { index: Vec<u32>, caps: Vec<u32> },
    #[error("row {0} of the matrix vanishes (hypothesis H requires every row to have a nonzero entry)")]
    ZeroRow(usize),
    #[error("entry ({row}, {col}) is negative; only nonnegative rational entries are supported")]
    NegativeEntry { row: usize, col: usize },
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("Z = {z} is outside the admissible range [{min}, {max}]")]
    ZOutOfRange { z: usize, min: usize, max: usize },
    #[error("invalid root system label {0:?}")]
    InvalidLabel(String),
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("evaluation needs about {estimate} injections, above the limit of {limit}; pass force to override")]
    Infeasible { estimate: u128, limit: u128 },
    #[error("polynomial has terms outside the expected Bernoulli span: {0}")]
    OutsideSpan(String),
    #[error("linear form vector has length {got}, expected {expected}")]
    FormCount { got: usize, expected: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
