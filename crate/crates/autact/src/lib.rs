//! Automorphisms of small p-groups, the `μ` map into `Δ = GF(p)^× × GF(p)^×`
//! and action exponents along the lower central series.

pub mod action;
pub mod auto;
pub mod error;
pub mod mu;

pub use action::{action_exponents, verify_centralizer_congruence, ActionExponents, CongruenceReport};
pub use auto::{aut_group_bruteforce, Auto};
pub use error::{AutError, Result};
pub use mu::{mu, DeltaElement};
