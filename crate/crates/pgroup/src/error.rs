use mcf_groupkernel::GroupError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PGroupError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group of order {0} is not a p-group")]
    NotPGroup(u128),
    #[error("requires a maximal-class group of order at least p^4")]
    NotMaximalClass,
    #[error("subgroup enumeration exceeded {cap} subgroups")]
    SubgroupCap { cap: usize },
    #[error("E2 set is not a subgroup containing Z2")]
    EngelSet,
    #[error("presentation: {0}")]
    Presentation(String),
}

impl PGroupError {
    pub fn is_cap(&self) -> bool {
        match self {
            PGroupError::Group(g) => g.is_cap(),
            PGroupError::SubgroupCap { .. } => true,
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, PGroupError>;
