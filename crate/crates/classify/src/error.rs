use mcf_autact::AutError;
use mcf_fusion::FusionError;
use mcf_groupkernel::GroupError;
use mcf_pgroup::PGroupError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    PGroup(#[from] PGroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error("table data is malformed: {0}")]
    Data(String),
    #[error("no table row matches: {0}")]
    Miss(String),
    #[error("inconsistent summary: {0}")]
    Inconsistent(String),
    #[error("automorphism does not normalize Aut_S(γ₁(S))")]
    NotInNormalizer,
    #[error("no extension to Aut_F(S) found for an automorphism of γ₁(S)")]
    NoExtension,
    #[error("μ₁ is not well defined: extensions disagree")]
    IllDefined,
    #[error("{0}")]
    Precondition(String),
}

impl ClassifyError {
    pub fn is_cap(&self) -> bool {
        match self {
            ClassifyError::Group(g) => g.is_cap(),
            ClassifyError::PGroup(g) => g.is_cap(),
            ClassifyError::Aut(a) => a.is_cap(),
            ClassifyError::Fusion(f) => f.is_cap(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, ClassifyError>;
