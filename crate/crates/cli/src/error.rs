use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("property failures: {0}")]
    Property(String),
    #[error("{0}")]
    Computation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// `2` for cap violations, `1` for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap(_) => 2,
            _ => 1,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, CliError::Cap(_))
    }
}

macro_rules! from_library {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                if e.is_cap() { CliError::Cap(e.to_string()) } else { CliError::Computation(e.to_string()) }
            }
        }
    )*};
}

from_library!(mcf_pgroup::PGroupError, mcf_autact::AutError, mcf_fusion::FusionError, mcf_classify::ClassifyError);

impl From<mcf_groupkernel::GroupError> for CliError {
    fn from(e: mcf_groupkernel::GroupError) -> Self {
        match e {
            mcf_groupkernel::GroupError::Parse(s) => CliError::Parse(s),
            e if e.is_cap() => CliError::Cap(e.to_string()),
            e => CliError::Computation(e.to_string()),
        }
    }
}

impl From<mcf_repsl2::RepError> for CliError {
    fn from(e: mcf_repsl2::RepError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
