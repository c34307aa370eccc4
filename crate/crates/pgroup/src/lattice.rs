//! Normal-subgroup and full subgroup-lattice enumeration.

use std::collections::HashSet;

use mcf_groupkernel::{ElemSet, TableGroup};

use crate::error::{PGroupError, Result};

/// Sorted element indices; used as a canonical subgroup key.
pub fn key(set: &ElemSet) -> Vec<u32> {
    set.ones().map(|x| x as u32).collect()
}

/// All normal subgroups of `S` (the whole table), ordered by size then key.
pub fn normal_subgroups(t: &TableGroup, cap: usize) -> Result<Vec<ElemSet>> {
    let all = t.full_set();
    let mut found: HashSet<ElemSet> = HashSet::new();
    let mut frontier = vec![t.trivial()];
    found.insert(t.trivial());
    while let Some(nsub) = frontier.pop() {
        let mut covered = nsub.clone();
        for x in all.ones() {
            if covered.contains(x) {
                continue;
            }
            let mut seed = nsub.clone();
            seed.insert(x);
            let next = t.normal_closure(&seed, &all);
            covered.union_with(&next);
            if found.insert(next.clone()) {
                if found.len() > cap {
                    return Err(PGroupError::SubgroupCap { cap });
                }
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<ElemSet> = found.into_iter().collect();
    out.sort_by_key(|s| (TableGroup::order_of(s), key(s)));
    Ok(out)
}

/// All subgroups of `within`, grouped by `log_p` of their order.
///
/// Layer `k+1` is built from layer `k` using `⟨H, x⟩` with `x ∈ N(H) \ H`
/// and `x^p ∈ H`; every subgroup of a p-group arises this way.
pub fn all_subgroups(t: &TableGroup, within: &ElemSet, p: u64, cap: usize) -> Result<Vec<Vec<ElemSet>>> {
    let mut layers = vec![vec![t.trivial()]];
    let mut total = 1usize;
    loop {
        let mut next: HashSet<ElemSet> = HashSet::new();
        for h in layers.last().expect("nonempty") {
            let norm = t.normalizer_in(within, h);
            let mut covered = h.clone();
            for x in norm.ones() {
                if covered.contains(x) || !h.contains(t.power(x as u32, p) as usize) {
                    continue;
                }
                let k = t.extend(h, &[x as u32]);
                let mut fresh = k.clone();
                fresh.difference_with(h);
                covered.union_with(&fresh);
                next.insert(k);
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > cap {
            return Err(PGroupError::SubgroupCap { cap });
        }
        let mut layer: Vec<ElemSet> = next.into_iter().collect();
        layer.sort_by_key(key);
        layers.push(layer);
    }
    Ok(layers)
}

/// Partition of a list of subgroups into `S`-conjugacy classes; each class is
/// returned sorted by key, classes in order of their least member.
pub fn conjugacy_classes(t: &TableGroup, subgroups: &[ElemSet], by: &[u32]) -> Vec<Vec<ElemSet>> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut classes = Vec::new();
    let mut sorted: Vec<&ElemSet> = subgroups.iter().collect();
    sorted.sort_by_key(|s| key(s));
    for h in sorted {
        if seen.contains(h) {
            continue;
        }
        let mut orbit = vec![h.clone()];
        seen.insert(h.clone());
        let mut i = 0;
        while i < orbit.len() {
            for &g in by {
                let c = t.conjugate_set(&orbit[i], g);
                if seen.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit.sort_by_key(key);
        classes.push(orbit);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::construct;

    fn table(g: &mcf_groupkernel::PcGroup) -> TableGroup {
        TableGroup::from_group(g, 4096).unwrap().0
    }

    /// Oracle: closure of every subset of size ≤ 2 covers all subgroups of
    /// 2-generated groups such as D8.
    #[test]
    fn d8_lattice_matches_pairs() {
        let t = table(&construct::dihedral_pc(3).unwrap());
        let layers = all_subgroups(&t, &t.full_set(), 2, 1000).unwrap();
        let count: usize = layers.iter().map(Vec::len).sum();
        let mut pairs = HashSet::new();
        for a in 0..8 {
            for b in 0..8 {
                pairs.insert(t.closure(&[a, b]));
            }
        }
        assert_eq!(count, pairs.len());
        assert_eq!(count, 10);
        let classes = conjugacy_classes(&t, &layers[2], t.gens());
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn elementary_abelian_subspace_count() {
        // Subspaces of F_3^3: 1 + 13 + 13 + 1.
        let t = table(&construct::elementary_abelian_pc(3, 3).unwrap());
        let layers = all_subgroups(&t, &t.full_set(), 3, 1000).unwrap();
        let sizes: Vec<usize> = layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 13, 13, 1]);
        assert!(all_subgroups(&t, &t.full_set(), 3, 10).unwrap_err().is_cap());
    }

    #[test]
    fn normal_subgroups_of_d16() {
        let t = table(&construct::dihedral_pc(4).unwrap());
        let ns = normal_subgroups(&t, 1000).unwrap();
        // 1, Z(S), ⟨r²⟩, the three maximal subgroups, S.
        let orders: Vec<usize> = ns.iter().map(TableGroup::order_of).collect();
        assert_eq!(orders, vec![1, 2, 4, 8, 8, 8, 16]);
    }
}
