use thiserror::Error;

/// Failures raised by group constructions and scans.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image array is not a bijection of 0..{0}")]
    NotABijection(usize),
    #[error("scan-cap exceeded in {what}: size {size} > cap {cap}")]
    ScanCap { what: String, size: u128, cap: u128 },
    #[error("element does not lie in the parent group")]
    ElementOutsideParent,
    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a p-group")]
    NotPGroup,
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u128 },
    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl GroupError {
    pub fn cap(what: impl Into<String>, size: u128, cap: u128) -> Self {
        GroupError::ScanCap { what: what.into(), size, cap }
    }

    /// True for errors caused by a configured cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, GroupError::ScanCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;
