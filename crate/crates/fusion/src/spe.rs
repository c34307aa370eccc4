//! Strongly p-embedded subgroups of small groups given by tables.

use std::collections::HashSet;

use mcf_groupkernel::{p_valuation, ElemSet, TableGroup};

/// Outcome of the strongly p-embedded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpeOutcome {
    /// `p` does not divide `|H|`.
    TrivialSylow,
    /// The Sylow intersection graph is connected.
    NoneFound,
    /// A verified strongly p-embedded subgroup.
    Witness(ElemSet),
}

impl SpeOutcome {
    pub fn witness(&self) -> Option<&ElemSet> {
        match self {
            SpeOutcome::Witness(m) => Some(m),
            _ => None,
        }
    }
}

fn is_p_power(mut n: usize, p: u64) -> bool {
    while n > 1 && n % p as usize == 0 {
        n /= p as usize;
    }
    n == 1
}

/// A Sylow `p`-subgroup, grown inside successive normalizers.
pub fn sylow_subgroup(h: &TableGroup, p: u64) -> ElemSet {
    let target = (p as usize).pow(p_valuation(h.size() as u128, p));
    let mut t = h.trivial();
    while TableGroup::order_of(&t) < target {
        let n = h.normalizer(&t);
        let x = n
            .ones()
            .map(|x| x as u32)
            .find(|&x| !t.contains(x as usize) && is_p_power(h.elem_order_of(x) as usize, p))
            .expect("a proper p-subgroup has a larger normalizing p-element");
        t = h.extend(&t, &[x]);
    }
    t
}

/// Definitional test: `p` divides `|M|`, `M < H`, and `M ∩ M^h` is a
/// `p′`-group for every `h ∉ M`.
pub fn is_strongly_p_embedded(h: &TableGroup, m: &ElemSet, p: u64) -> bool {
    let om = TableGroup::order_of(m);
    if !h.is_subgroup(m) || om == h.size() || om % p as usize != 0 {
        return false;
    }
    let mut checked: HashSet<ElemSet> = HashSet::new();
    (0..h.size() as u32).filter(|&g| !m.contains(g as usize)).all(|g| {
        let c = h.conjugate_set(m, g);
        if !checked.insert(c.clone()) {
            return true;
        }
        TableGroup::order_of(&TableGroup::intersection(m, &c)) % p as usize != 0
    })
}

/// Searches for a strongly p-embedded subgroup: the stabilizer of the
/// connected component of a Sylow subgroup `T` in the graph on `Syl_p(H)`
/// whose edges join Sylow subgroups with non-trivial intersection.
pub fn has_strongly_p_embedded(h: &TableGroup, p: u64) -> SpeOutcome {
    if h.size() % p as usize != 0 {
        return SpeOutcome::TrivialSylow;
    }
    let t = sylow_subgroup(h, p);
    let mut sylows: Vec<ElemSet> = Vec::new();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    for g in 0..h.size() as u32 {
        let c = h.conjugate_set(&t, g);
        if seen.insert(c.clone()) {
            sylows.push(c);
        }
    }
    let mut comp = vec![false; sylows.len()];
    comp[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..sylows.len() {
            if !comp[j] && TableGroup::order_of(&TableGroup::intersection(&sylows[i], &sylows[j])) > 1 {
                comp[j] = true;
                stack.push(j);
            }
        }
    }
    if comp.iter().all(|&c| c) {
        return SpeOutcome::NoneFound;
    }
    let members: HashSet<&ElemSet> = sylows.iter().zip(&comp).filter(|(_, &c)| c).map(|(s, _)| s).collect();
    let mut m = h.empty_set();
    for g in 0..h.size() as u32 {
        if members.contains(&h.conjugate_set(&t, g)) {
            m.insert(g as usize);
        }
    }
    assert!(is_strongly_p_embedded(h, &m, p), "component stabilizer failed the definitional check");
    SpeOutcome::Witness(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::construct;

    fn table(g: &mcf_groupkernel::PermGroup) -> TableGroup {
        TableGroup::from_group(g, 4096).unwrap().0
    }

    /// Exhaustive oracle: try every subgroup generated by at most two elements.
    fn brute(h: &TableGroup, p: u64) -> Vec<usize> {
        let mut found = HashSet::new();
        let n = h.size() as u32;
        for a in 0..n {
            for b in a..n {
                let m = h.closure(&[a, b]);
                if is_strongly_p_embedded(h, &m, p) {
                    found.insert(m);
                }
            }
        }
        let mut v: Vec<usize> = found.iter().map(TableGroup::order_of).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn sym3_at_three_has_none() {
        let h = table(&construct::sym(3).unwrap());
        assert_eq!(has_strongly_p_embedded(&h, 3), SpeOutcome::NoneFound);
        assert!(brute(&h, 3).is_empty());
    }

    #[test]
    fn sym3_at_two_is_its_own_borel() {
        let h = table(&construct::sym(3).unwrap());
        let m = has_strongly_p_embedded(&h, 2);
        assert_eq!(TableGroup::order_of(m.witness().unwrap()), 2);
        assert_eq!(brute(&h, 2), vec![2, 2, 2]);
    }

    #[test]
    fn sl2_3_at_three_gives_order_six() {
        let h = table(&construct::sl2(3).unwrap());
        assert_eq!(h.size(), 24);
        let m = has_strongly_p_embedded(&h, 3);
        assert_eq!(TableGroup::order_of(m.witness().unwrap()), 6);
        assert!(brute(&h, 3).iter().all(|&o| o == 6));
    }

    #[test]
    fn coprime_order_is_flagged() {
        let h = table(&construct::sym(3).unwrap());
        assert_eq!(has_strongly_p_embedded(&h, 5), SpeOutcome::TrivialSylow);
    }

    #[test]
    fn sym4_at_two_has_none() {
        let h = table(&construct::sym(4).unwrap());
        assert_eq!(has_strongly_p_embedded(&h, 2), SpeOutcome::NoneFound);
    }

    #[test]
    fn sylow_orders() {
        let h = table(&construct::gl2(3).unwrap());
        assert_eq!(TableGroup::order_of(&sylow_subgroup(&h, 2)), 16);
        assert_eq!(TableGroup::order_of(&sylow_subgroup(&h, 3)), 3);
    }
}
