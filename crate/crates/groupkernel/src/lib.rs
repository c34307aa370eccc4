//! Group kernels: permutation and power-commutator backends, mult tables,
//! subgroup scans and homomorphisms.

pub mod caps;
pub mod construct;
pub mod error;
pub mod group;
pub mod io;
pub mod map;
pub mod pc;
pub mod perm;
pub mod permgroup;
pub mod scan;
pub mod subgroup;
pub mod table;

pub use caps::Caps;
pub use error::{GroupError, Result};
pub use group::{is_prime, p_log, p_valuation, prime_divisors, FiniteGroup};
pub use map::GroupMap;
pub use pc::{Consistency, PcGroup};
pub use perm::Perm;
pub use permgroup::PermGroup;
pub use subgroup::Subgroup;
pub use table::{ElemSet, TableGroup};
