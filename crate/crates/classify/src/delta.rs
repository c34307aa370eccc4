//! Subgroups of `Δ = GF(p)^× × GF(p)^×`.

use std::collections::BTreeSet;

use mcf_autact::DeltaElement;
use serde::Serialize;

pub type DeltaSet = BTreeSet<(u64, u64)>;

pub(crate) fn pow_signed(u: u64, k: i64, p: u64) -> u64 {
    let e = k.rem_euclid((p - 1) as i64) as u64;
    let mut r = 1u64;
    for _ in 0..e {
        r = r * u % p;
    }
    r
}

pub fn units(p: u64) -> impl Iterator<Item = u64> {
    1..p
}

/// The whole of `Δ`.
pub fn full(p: u64) -> DeltaSet {
    units(p).flat_map(|a| units(p).map(move |b| (a, b))).collect()
}

/// `{(u^a, u^b)}`.
pub fn power_pair(p: u64, a: i64, b: i64) -> DeltaSet {
    units(p).map(|u| (pow_signed(u, a, p), pow_signed(u, b, p))).collect()
}

/// `{(u², w)}`.
pub fn square_any(p: u64) -> DeltaSet {
    units(p).flat_map(|u| units(p).map(move |w| (u * u % p, w))).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `Δ_{k/ℓ}`, a cyclic subgroup of order `p − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSubgroup {
    pub p: u64,
    pub k: i64,
    pub l: i64,
    pub elements: DeltaSet,
}

impl DeltaSubgroup {
    /// Requires `gcd(k, ℓ) = 1`.
    pub fn new(p: u64, k: i64, l: i64) -> Option<Self> {
        if gcd(k, l) != 1 {
            return None;
        }
        Some(DeltaSubgroup { p, k, l, elements: power_pair(p, l, k) })
    }

    /// `Δ_i = {(r, r^i)}`.
    pub fn diagonal(p: u64, i: i64) -> Self {
        Self::new(p, i, 1).expect("ℓ = 1 is coprime to everything")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The subgroup of index `n` in a cyclic subgroup of `Δ`.
pub fn fraction(p: u64, set: &DeltaSet, n: u64) -> DeltaSet {
    set.iter().map(|&(a, b)| (pow_signed(a, n as i64, p), pow_signed(b, n as i64, p))).collect()
}

pub fn is_subgroup(p: u64, set: &DeltaSet) -> bool {
    set.contains(&(1, 1)) && set.iter().all(|x| set.iter().all(|y| set.contains(&(x.0 * y.0 % p, x.1 * y.1 % p))))
}

/// The subgroup generated by a list of elements.
pub fn generated(p: u64, gens: &[DeltaElement]) -> DeltaSet {
    let mut set = DeltaSet::from([(1, 1)]);
    let mut frontier = vec![(1u64, 1u64)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = (x.0 * g.r % p, x.1 * g.s % p);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}
