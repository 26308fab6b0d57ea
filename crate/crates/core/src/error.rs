use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid type (n|a,b): {0}")]
    InvalidContext(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("element is not of homogeneous parity")]
    NonHomogeneous,
    #[error("odd-odd block is not invertible over the coefficient ring")]
    SingularMatrix,
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("unknown series {0:?}")]
    UnknownSeries(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
