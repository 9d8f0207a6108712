use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("insufficient coefficients: need {needed}, have {have}")]
    InsufficientCoefficients { needed: usize, have: usize },
    #[error("zero constant term in power series")]
    ZeroConstantTerm,
    #[error("window mismatch: {0} vs {1}")]
    WindowMismatch(u32, u32),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("malformed label: {0}")]
    MalformedLabel(String),
    #[error("invalid mixture: {0}")]
    InvalidMixture(String),
    #[error("ratio sequence did not converge: {0}")]
    NotConverged(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}
