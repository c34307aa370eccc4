//! Library behind the `mcf` binary: each subcommand is a function returning
//! a serializable report, so the binary only parses flags and prints.

pub mod analyze;
pub mod cache;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod fusion;
pub mod options;
pub mod rep;
pub mod report;

pub use error::{CliError, Result};
pub use options::Options;
pub use report::AnalysisReport;
