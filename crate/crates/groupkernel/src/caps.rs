/// Enumeration limits shared by every scan-based algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order that may be scanned element by element.
    pub max_scan: u128,
    /// Largest number of subgroups a lattice enumeration may produce.
    pub max_subgroup_enum: usize,
    /// Largest order for which a full multiplication table is built.
    pub table: usize,
    /// Largest order for which regularity is decided by pair enumeration.
    pub regular_pairs: usize,
    /// Largest order for brute-force automorphism enumeration.
    pub aut_order: usize,
    /// Largest minimal generating rank for brute-force automorphism enumeration.
    pub aut_rank: usize,
    /// Largest order for which a PC presentation is verified by enumeration.
    pub pc_verify: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_scan: 10_000_000,
            max_subgroup_enum: 100_000,
            table: 4096,
            regular_pairs: 3125,
            aut_order: 1024,
            aut_rank: 3,
            pc_verify: 1_000_000,
        }
    }
}
