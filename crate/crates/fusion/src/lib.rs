//! Fusion systems on small p-groups: `F_S(G)` from an ambient group or a
//! system generated by automorphisms, with the saturation predicates,
//! essential subgroups, pearls and focal data.

pub mod error;
pub mod essential;
pub mod focal;
pub mod generated;
pub mod local;
pub mod realizable;
pub mod saturation;
pub mod spe;
pub mod system;
pub mod theorem_d;

pub use error::{FusionError, Result};
pub use essential::{classify_pearl, essential_subgroups, normalizer_tower, ClassTag, EssentialReport, Mode};
pub use focal::{focal_data, FocalData, FocalSummary};
pub use generated::Generated;
pub use realizable::{AutF, Realizable};
pub use saturation::{prune_pearl_class, saturation_oracle, saturation_spot_check, SaturationReport, SpotCheck};
pub use spe::{has_strongly_p_embedded, SpeOutcome};
pub use system::FusionSystem;
pub use theorem_d::{verify_theorem_d, TheoremDReport};
