use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("k = {0} is not admissible: k must be an odd integer >= 3")]
    InvalidGenusParameter(i64),

    #[error("label {label} out of range 1..={max}")]
    LabelOutOfRange { label: usize, max: usize },

    #[error("labels must be distinct, got {0} twice")]
    RepeatedLabel(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must have dimension >= 1")]
    EmptyMatrix,

    #[error("rows have inconsistent lengths")]
    RaggedRows,

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("index set is not invariant: column {column} has support outside the block")]
    NotInvariant { column: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("division leaves a nonzero remainder")]
    NonzeroRemainder,

    #[error("divisor must be monic")]
    NonMonicDivisor,

    #[error("matrix has a negative entry")]
    NegativeEntry,

    #[error("nonzero pattern is not strongly connected or is zero; analyse blocks separately")]
    Reducible,

    #[error("entry cannot be represented as a floating-point number")]
    Unrepresentable,

    #[error("power iteration did not reach tolerance after {0} steps")]
    NotConverged(usize),

    #[error("malformed band list: {0}")]
    MalformedBands(String),

    #[error("cannot parse word token {0:?}")]
    BadToken(String),

    #[error("verification failed for k = {k}: {reason}")]
    Verification { k: u32, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
