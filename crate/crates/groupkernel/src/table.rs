use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

/// Subsets of a table group, indexed by element number.
pub type ElemSet = FixedBitSet;

/// A finite group stored as a full multiplication table.
///
/// Element 0 is the identity. Elements are numbered in the sorted order of
/// the source group's elements, so numbering is deterministic.
#[derive(Clone, Debug)]
pub struct TableGroup {
    n: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    gens: Vec<u32>,
    orders: Vec<u32>,
}

impl TableGroup {
    /// Enumerates `g` and tabulates it. Returns the table and, for each
    /// table index, the original element.
    pub fn from_group<G: FiniteGroup>(g: &G, cap: usize) -> Result<(TableGroup, Vec<G::Elem>)> {
        let ord = g.order();
        if ord > cap as u128 || ord > u16::MAX as u128 {
            return Err(GroupError::cap("multiplication table", ord, cap as u128));
        }
        let mut elems = g.elements(cap as u128)?;
        elems.sort();
        let id = g.identity();
        let pos = elems.iter().position(|e| *e == id).expect("identity present");
        let idv = elems.remove(pos);
        elems.insert(0, idv);
        let gens = g.generators();
        let tg = Self::from_elements(&elems, &gens, |a, b| g.mul(a, b))?;
        Ok((tg, elems))
    }

    /// Tabulates a closed set of elements (identity first) using `mul`.
    pub fn from_elements<E: Clone + Eq + std::hash::Hash>(
        elems: &[E],
        gens: &[E],
        mul: impl Fn(&E, &E) -> E,
    ) -> Result<TableGroup> {
        let n = elems.len();
        if n > u16::MAX as usize {
            return Err(GroupError::cap("multiplication table", n as u128, u16::MAX as u128));
        }
        let index: HashMap<&E, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let look = |e: &E| -> Result<u32> { index.get(e).copied().ok_or(GroupError::ElementOutsideParent) };
        let gidx: Vec<u32> = gens.iter().map(look).collect::<Result<_>>()?;
        let mut right: Vec<Vec<u32>> = Vec::with_capacity(gidx.len());
        for g in gens {
            let r: Vec<u32> = elems.iter().map(|e| look(&mul(e, g))).collect::<Result<_>>()?;
            right.push(r);
        }
        // Spanning tree of the right Cayley graph rooted at the identity.
        let mut parent = vec![u32::MAX; n];
        let mut letter = vec![0usize; n];
        let mut bfs = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        bfs.push(0u32);
        let mut k = 0;
        while k < bfs.len() {
            let a = bfs[k];
            k += 1;
            for (gi, r) in right.iter().enumerate() {
                let b = r[a as usize];
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    parent[b as usize] = a;
                    letter[b as usize] = gi;
                    bfs.push(b);
                }
            }
        }
        if bfs.len() != n {
            return Err(GroupError::Precondition("generators do not generate the element set".into()));
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            table[a * n] = a as u16;
            for &b in &bfs[1..] {
                let b = b as usize;
                let prev = table[a * n + parent[b] as usize] as usize;
                table[a * n + b] = right[letter[b]][prev] as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let mut tg = TableGroup { n, table, inv, gens: gidx, orders: vec![0; n] };
        tg.orders = (0..n as u32).map(|a| tg.compute_order(a)).collect();
        Ok(tg)
    }

    /// Tabulates a subgroup given as a subset; returns the new table and
    /// the parent index of each new element.
    pub fn subgroup_table(&self, set: &ElemSet) -> (TableGroup, Vec<u32>) {
        let elems: Vec<u32> = self.elements_of(set);
        let gens = self.generating_set(set);
        let tg = TableGroup::from_elements(&elems, &gens, |a, b| self.mul(*a, *b)).expect("closed subset");
        (tg, elems)
    }

    fn compute_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize] as u32
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.inv[a as usize] as u32
    }

    #[inline]
    pub fn conj(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inverse(g), a), g)
    }

    #[inline]
    pub fn comm(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inverse(a), self.inverse(b)), self.mul(a, b))
    }

    pub fn power(&self, a: u32, k: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..(k % self.orders[a as usize] as u64) {
            acc = self.mul(acc, a);
        }
        acc
    }

    #[inline]
    pub fn elem_order_of(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.n)
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn trivial(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert(0);
        s
    }

    pub fn set_from(&self, elems: &[u32]) -> ElemSet {
        let mut s = self.empty_set();
        for &e in elems {
            s.insert(e as usize);
        }
        s
    }

    pub fn elements_of(&self, set: &ElemSet) -> Vec<u32> {
        set.ones().map(|i| i as u32).collect()
    }

    pub fn order_of(set: &ElemSet) -> usize {
        set.count_ones(..)
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> ElemSet {
        let mut set = self.trivial();
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        if gens.is_empty() {
            return set;
        }
        let mut queue = VecDeque::from([0u32]);
        while let Some(a) = queue.pop_front() {
            for &g in &gens {
                let b = self.mul(a, g);
                if !set.contains(b as usize) {
                    set.insert(b as usize);
                    queue.push_back(b);
                }
            }
        }
        set
    }

    /// Subgroup generated by a subgroup and extra elements.
    pub fn extend(&self, base: &ElemSet, extra: &[u32]) -> ElemSet {
        let mut gens = self.generating_set(base);
        gens.extend_from_slice(extra);
        self.closure(&gens)
    }

    pub fn join(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut gens = self.generating_set(a);
        gens.extend(self.generating_set(b));
        self.closure(&gens)
    }

    pub fn is_subgroup(&self, set: &ElemSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let el = self.elements_of(set);
        el.iter().all(|&a| el.iter().all(|&b| set.contains(self.mul(a, b) as usize)))
    }

    /// Greedy generating set of the subgroup `set`: scans elements in index order and keeps those
    /// not yet generated.
    pub fn generating_set(&self, set: &ElemSet) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        let target = Self::order_of(set);
        for a in set.ones() {
            if Self::order_of(&cur) == target {
                break;
            }
            if !cur.contains(a) {
                gens.push(a as u32);
                cur = self.closure(&gens);
            }
        }
        gens
    }

    pub fn conjugate_set(&self, set: &ElemSet, g: u32) -> ElemSet {
        let mut out = self.empty_set();
        for a in set.ones() {
            out.insert(self.conj(a as u32, g) as usize);
        }
        out
    }

    /// Elements of `within` normalizing the subgroup `h`.
    pub fn normalizer_in(&self, within: &ElemSet, h: &ElemSet) -> ElemSet {
        let gens = self.generating_set(h);
        let mut out = self.empty_set();
        for g in within.ones() {
            if gens.iter().all(|&x| h.contains(self.conj(x, g as u32) as usize)) {
                out.insert(g);
            }
        }
        out
    }

    pub fn normalizer(&self, h: &ElemSet) -> ElemSet {
        self.normalizer_in(&self.full_set(), h)
    }

    /// Elements of `within` commuting with every element of `h`.
    pub fn centralizer_in(&self, within: &ElemSet, h: &ElemSet) -> ElemSet {
        let gens = self.generating_set(h);
        let mut out = self.empty_set();
        for g in within.ones() {
            let g = g as u32;
            if gens.iter().all(|&x| self.mul(x, g) == self.mul(g, x)) {
                out.insert(g as usize);
            }
        }
        out
    }

    pub fn centralizer(&self, h: &ElemSet) -> ElemSet {
        self.centralizer_in(&self.full_set(), h)
    }

    pub fn center_of(&self, h: &ElemSet) -> ElemSet {
        self.centralizer_in(h, h)
    }

    /// `[A, B]` for subgroups `A`, `B`: the normal closure in `⟨A, B⟩` of
    /// the generator commutators.
    pub fn commutator(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let ga = self.generating_set(a);
        let gb = self.generating_set(b);
        let mut comms = self.trivial();
        for &x in &ga {
            for &y in &gb {
                comms.insert(self.comm(x, y) as usize);
            }
        }
        let mut both = ga;
        both.extend(gb);
        let ab = self.closure(&both);
        self.normal_closure(&comms, &ab)
    }

    pub fn derived(&self, h: &ElemSet) -> ElemSet {
        self.commutator(h, h)
    }

    /// `{x ∈ within : [a, x] ∈ b for all a ∈ a_set}`, i.e. `C(A/B)` when `B ⊴ A`.
    pub fn centralizer_mod(&self, within: &ElemSet, a_set: &ElemSet, b: &ElemSet) -> ElemSet {
        let gens = self.generating_set(a_set);
        let mut out = self.empty_set();
        for x in within.ones() {
            if gens.iter().all(|&a| b.contains(self.comm(a, x as u32) as usize)) {
                out.insert(x);
            }
        }
        out
    }

    /// Smallest subgroup containing `set` normalized by `by`.
    pub fn normal_closure(&self, set: &ElemSet, by: &ElemSet) -> ElemSet {
        let mut cur = self.closure(&self.elements_of(set));
        let bg = self.generating_set(by);
        loop {
            let gens = self.generating_set(&cur);
            let mut extra = Vec::new();
            for &x in &gens {
                for &g in &bg {
                    let c = self.conj(x, g);
                    if !cur.contains(c as usize) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return cur;
            }
            cur = self.extend(&cur, &extra);
        }
    }

    pub fn is_normal_in(&self, h: &ElemSet, g: &ElemSet) -> bool {
        let hg = self.generating_set(h);
        self.generating_set(g)
            .iter()
            .all(|&t| hg.iter().all(|&x| h.contains(self.conj(x, t) as usize)))
    }

    pub fn intersection(a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut c = a.clone();
        c.intersect_with(b);
        c
    }

    pub fn is_abelian(&self, h: &ElemSet) -> bool {
        let g = self.generating_set(h);
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by the `p`-th powers of `h`.
    pub fn agemo(&self, h: &ElemSet, p: u64) -> ElemSet {
        let pw: Vec<u32> = h.ones().map(|a| self.power(a as u32, p)).collect();
        self.closure(&pw)
    }

    /// Subgroup generated by the elements of order `p` in `h`.
    pub fn omega(&self, h: &ElemSet, p: u64) -> ElemSet {
        let el: Vec<u32> = h.ones().map(|a| a as u32).filter(|&a| self.orders[a as usize] as u64 == p).collect();
        self.closure(&el)
    }

    /// Frattini subgroup of a p-group: `H′ ℧¹(H)`.
    pub fn frattini_pgroup(&self, h: &ElemSet, p: u64) -> ElemSet {
        self.join(&self.derived(h), &self.agemo(h, p))
    }

    /// `true` iff `a ⊆ b`.
    pub fn subset(a: &ElemSet, b: &ElemSet) -> bool {
        a.is_subset(b)
    }

    /// Right cosets `H g` of `h` inside `within`, by least element.
    pub fn right_transversal(&self, within: &ElemSet, h: &ElemSet) -> Vec<u32> {
        let mut covered = self.empty_set();
        let mut reps = Vec::new();
        let hel = self.elements_of(h);
        for g in within.ones() {
            if covered.contains(g) {
                continue;
            }
            reps.push(g as u32);
            for &x in &hel {
                covered.insert(self.mul(x, g as u32) as usize);
            }
        }
        reps
    }

    /// Checks the group axioms on the table; used by tests and input checks.
    pub fn check_axioms(&self) -> bool {
        let n = self.n as u32;
        (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a && self.mul(a, self.inverse(a)) == 0)
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }
}

impl FiniteGroup for TableGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        TableGroup::mul(self, *a, *b)
    }

    fn inv(&self, a: &u32) -> u32 {
        self.inverse(*a)
    }

    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }

    fn order(&self) -> u128 {
        self.n as u128
    }

    fn contains(&self, a: &u32) -> bool {
        (*a as usize) < self.n
    }

    fn visit_elements(&self, f: &mut dyn FnMut(&u32) -> bool) {
        for a in 0..self.n as u32 {
            if !f(&a) {
                return;
            }
        }
    }

    fn elem_order(&self, a: &u32) -> u64 {
        self.orders[*a as usize] as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn sym4_table_axioms() {
        let (t, el) = TableGroup::from_group(&construct::sym(4).unwrap(), 100).unwrap();
        assert_eq!(t.size(), 24);
        assert!(el[0].is_identity());
        assert!(t.check_axioms());
    }

    #[test]
    fn dihedral_subgroup_closure() {
        let d = construct::dihedral_pc(4).unwrap();
        let (t, el) = TableGroup::from_group(&d, 100).unwrap();
        // r is g2, so r^2 = g3 has order 4.
        let r2 = el.iter().position(|v| *v == vec![0, 0, 1, 0]).unwrap() as u32;
        let sub = t.closure(&[r2]);
        assert_eq!(TableGroup::order_of(&sub), 4);
        let all = t.full_set();
        assert_eq!(TableGroup::order_of(&t.derived(&all)), 4);
        assert_eq!(TableGroup::order_of(&t.center_of(&all)), 2);
    }

    #[test]
    fn commutator_matches_pairwise_closure() {
        let (t, _) = TableGroup::from_group(&construct::wreath_pc(3).unwrap(), 100).unwrap();
        let all = t.full_set();
        for a in [all.clone(), t.closure(&[1, 2]), t.closure(&[5])] {
            let pairs: Vec<u32> = a.ones().flat_map(|x| all.ones().map(move |y| (x, y))).map(|(x, y)| t.comm(x as u32, y as u32)).collect();
            assert_eq!(t.commutator(&a, &all), t.closure(&pairs));
        }
    }

    #[test]
    fn table_rejects_large_group() {
        let g = construct::sym(8).unwrap();
        assert!(TableGroup::from_group(&g, 4096).unwrap_err().is_cap());
    }
}
