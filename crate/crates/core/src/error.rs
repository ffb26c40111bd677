use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sort mismatch: cannot combine H and Hbar elements")]
    SortMismatch,
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("inverted generator not allowed in the H sort")]
    InvertedInH,
    #[error("malformed weight vector: {0}")]
    MalformedVector(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("not expressible in weight-1 variables: {0}")]
    NotWeightOne(String),
    #[error("pole division left a nonzero constant term: {0}")]
    PoleNotClean(String),
    #[error("left tensor slot is not a single generator: {0}")]
    LeftSlotNotGenerator(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not polylogarithmic: {0}")]
    NonPolylogarithmic(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("identity does not hold: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
