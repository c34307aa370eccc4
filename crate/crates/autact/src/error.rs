use mcf_groupkernel::GroupError;
use mcf_pgroup::PGroupError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    PGroup(#[from] PGroupError),
    #[error("requires a maximal-class group of order at least p^4")]
    NotMaximalClass,
    #[error("automorphism does not have order coprime to p")]
    NotPPrime,
    #[error("no invariant maximal subgroup other than gamma1")]
    NoInvariantComplement,
    #[error("action exponent mismatch at level {level}: measured {measured}, predicted {predicted}")]
    Mismatch { level: usize, measured: u64, predicted: u64 },
    #[error("chain element s_{0} does not generate its series factor")]
    DegenerateChain(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl AutError {
    pub fn is_cap(&self) -> bool {
        match self {
            AutError::Group(g) => g.is_cap(),
            AutError::PGroup(g) => g.is_cap(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, AutError>;
