use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u64),
    #[error("degree {e} is outside 0..={max}")]
    DegreeOutOfRange { e: usize, max: usize },
    #[error("transvectant order {r} exceeds min({d}, {e})")]
    TransvectantOrder { r: usize, d: usize, e: usize },
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix is not invertible")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, RepError>;
