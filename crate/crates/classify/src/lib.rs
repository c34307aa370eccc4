//! Classification data for fusion systems on maximal class groups: the
//! appendix tables as data, the `μ₁` map and `Δ` subgroups, theorem case
//! dispatch and the semilinear monomial example family.

pub mod delta;
pub mod error;
pub mod family;
pub mod mu1;
pub mod tables;
pub mod theorem;

pub use delta::{DeltaSet, DeltaSubgroup};
pub use error::{ClassifyError, Result};
pub use family::{construct_example_family, ExampleFamily, ExtField, FamilyCertificate};
pub use mu1::{mu1, mu1_image};
pub use tables::{table1_lookup, table21_constellation, table3_lookup, CellQuery, Constellation};
pub use theorem::{theorem_case, CheckResult, CheckStatus, FusionSummary, Gamma1Kind, OpKind, TheoremCaseReport, TheoremId};
