//! Structure of finite p-groups held as multiplication tables.

pub mod battery;
pub mod error;
pub mod lattice;
pub mod pgroup;
pub mod power;
pub mod presentation;
pub mod profile;
pub mod series;

pub use error::{PGroupError, Result};
pub use pgroup::{PGroup, SubgroupSummary};
pub use presentation::{pc_presentation, pcgs};
pub use profile::{maxclass_profile, MaxClassProfile, Structure};
