use std::collections::{HashMap, VecDeque};

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

/// An enumerated subgroup: generators plus the full sorted element list.
#[derive(Clone, Debug)]
pub struct Subgroup<E> {
    gens: Vec<E>,
    elems: Vec<E>,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + std::hash::Hash + Ord> Subgroup<E> {
    /// Closure of `gens` inside `parent`, refusing more than `cap` elements.
    pub fn generate<G: FiniteGroup<Elem = E>>(parent: &G, gens: Vec<E>, cap: u128) -> Result<Self> {
        if gens.iter().any(|g| !parent.contains(g)) {
            return Err(GroupError::ElementOutsideParent);
        }
        let id = parent.identity();
        let mut seen: HashMap<E, usize> = HashMap::new();
        let mut list = vec![id.clone()];
        seen.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(a) = queue.pop_front() {
            for g in &gens {
                let b = parent.mul(&a, g);
                if !seen.contains_key(&b) {
                    if list.len() as u128 >= cap {
                        return Err(GroupError::cap("subgroup closure", list.len() as u128 + 1, cap));
                    }
                    seen.insert(b.clone(), list.len());
                    list.push(b.clone());
                    queue.push_back(b);
                }
            }
        }
        Ok(Self::from_parts(gens, list))
    }

    /// Wraps a set already known to be a subgroup.
    pub fn from_parts(gens: Vec<E>, mut elems: Vec<E>) -> Self {
        elems.sort();
        elems.dedup();
        let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Subgroup { gens, elems, index }
    }

    /// Builds a subgroup from its element set, choosing generators greedily.
    pub fn from_elements<G: FiniteGroup<Elem = E>>(parent: &G, elems: Vec<E>) -> Self {
        let mut sub = Self::from_parts(vec![], elems);
        let target = sub.order();
        let mut gens: Vec<E> = Vec::new();
        let mut cur: std::collections::HashSet<E> = [parent.identity()].into_iter().collect();
        for e in &sub.elems {
            if cur.len() as u128 == target {
                break;
            }
            if !cur.contains(e) {
                gens.push(e.clone());
                cur = closure_set(parent, &gens);
            }
        }
        sub.gens = gens;
        sub
    }

    pub fn gens(&self) -> &[E] {
        &self.gens
    }

    pub fn elements(&self) -> &[E] {
        &self.elems
    }

    pub fn order(&self) -> u128 {
        self.elems.len() as u128
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    /// Position of `e` in the sorted element list.
    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn is_subset_of(&self, other: &Subgroup<E>) -> bool {
        self.elems.iter().all(|e| other.contains(e))
    }

    pub fn same_elements(&self, other: &Subgroup<E>) -> bool {
        self.elems == other.elems
    }
}

fn closure_set<G: FiniteGroup>(parent: &G, gens: &[G::Elem]) -> std::collections::HashSet<G::Elem> {
    let id = parent.identity();
    let mut seen: std::collections::HashSet<G::Elem> = [id.clone()].into_iter().collect();
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let b = parent.mul(&a, g);
            if seen.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    seen
}
