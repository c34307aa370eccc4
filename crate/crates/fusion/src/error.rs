use mcf_autact::AutError;
use mcf_groupkernel::GroupError;
use mcf_pgroup::PGroupError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    PGroup(#[from] PGroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error("subgroup of order {order} is not a Sylow {p}-subgroup of a group of order {group_order}")]
    NotSylow { p: u64, order: u128, group_order: u128 },
    #[error("not-closed: subgroup is not listed in the generated system")]
    NotClosed,
    #[error("subgroup is not a pearl")]
    NotPearl,
    #[error("subgroup is not among the listed generators")]
    NotListed,
    #[error("requires a maximal-class Sylow subgroup of order at least p^4")]
    NotMaximalClass,
    #[error("map is not an automorphism of the given subgroup")]
    NotAutomorphism,
    #[error("{0}")]
    Precondition(String),
}

impl FusionError {
    pub fn is_cap(&self) -> bool {
        match self {
            FusionError::Group(g) => g.is_cap(),
            FusionError::PGroup(g) => g.is_cap(),
            FusionError::Aut(a) => a.is_cap(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, FusionError>;
