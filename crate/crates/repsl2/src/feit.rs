//! The lower bound on the degree of faithful indecomposable modules with a
//! non-cyclic-defect obstruction removed.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeitVerdict {
    pub p: u64,
    pub d: usize,
    pub l2p_type: bool,
    pub bound: usize,
    pub impossible: bool,
}

/// `⌈2(p − 1)/3⌉`.
pub fn feit_bound(p: u64) -> usize {
    ((2 * (p - 1)).div_ceil(3)) as usize
}

/// A faithful indecomposable module of dimension below the bound forces `L₂(p)`-type.
pub fn feit_bound_check(p: u64, d: usize, l2p_type: bool) -> FeitVerdict {
    let bound = feit_bound(p);
    FeitVerdict { p, d, l2p_type, bound, impossible: d < bound && !l2p_type }
}
