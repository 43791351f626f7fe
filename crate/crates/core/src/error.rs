use thiserror::Error;

/// Errors produced by polymset operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("axis {axis} out of range for dimension {dim}")]
    InvalidAxis { axis: usize, dim: usize },

    #[error("splitter output for {index} sums to {found}, expected {expected}")]
    ConservationViolation {
        index: String,
        expected: String,
        found: String,
    },

    #[error("splitter produced duplicate coordinate {coordinate} for {index}")]
    InvalidSplitter { index: String, coordinate: u64 },

    #[error("no copy of {0} to remove")]
    NoSuchCopy(String),

    #[error("index coordinate overflow")]
    IndexOverflow,

    #[error("universe too large: {0}")]
    UniverseTooLarge(String),

    #[error("invalid domain base: {0}")]
    InvalidDomainBase(String),

    #[error("index {index} lies outside the attached domain base")]
    OutOfDomain { index: String },

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
