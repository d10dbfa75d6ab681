use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("partition has content {actual}, expected {expected}")]
    ContentMismatch { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series with constant term {0} is not invertible over the integers")]
    NotInvertible(String),

    #[error("polynomial division left a non-zero remainder")]
    InexactDivision,
}
