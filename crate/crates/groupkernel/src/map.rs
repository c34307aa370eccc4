use std::collections::{HashMap, VecDeque};

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

/// A homomorphism given by generator images, tabulated on its domain.
#[derive(Clone, Debug)]
pub struct GroupMap<A, B> {
    gens: Vec<A>,
    images: Vec<B>,
    table: HashMap<A, B>,
}

impl<A, B> GroupMap<A, B>
where
    A: Clone + Eq + std::hash::Hash + Ord,
    B: Clone + Eq + std::hash::Hash + Ord,
{
    /// Extends `gens ↦ images` over `⟨gens⟩`; fails unless the assignment is
    /// multiplicative along every edge of the Cayley graph.
    pub fn from_generators<G, H>(dom: &G, cod: &H, gens: Vec<A>, images: Vec<B>, cap: u128) -> Result<Self>
    where
        G: FiniteGroup<Elem = A>,
        H: FiniteGroup<Elem = B>,
    {
        if gens.len() != images.len() {
            return Err(GroupError::Precondition("generator and image counts differ".into()));
        }
        let id = dom.identity();
        let mut table: HashMap<A, B> = HashMap::new();
        table.insert(id.clone(), cod.identity());
        let mut queue = VecDeque::from([id]);
        while let Some(a) = queue.pop_front() {
            let fa = table[&a].clone();
            for (g, h) in gens.iter().zip(&images) {
                let b = dom.mul(&a, g);
                let fb = cod.mul(&fa, h);
                match table.get(&b) {
                    Some(old) if *old != fb => return Err(GroupError::NotHomomorphism),
                    Some(_) => {}
                    None => {
                        if table.len() as u128 >= cap {
                            return Err(GroupError::cap("homomorphism domain", table.len() as u128 + 1, cap));
                        }
                        table.insert(b.clone(), fb);
                        queue.push_back(b);
                    }
                }
            }
        }
        Ok(GroupMap { gens, images, table })
    }

    pub fn gens(&self) -> &[A] {
        &self.gens
    }

    pub fn images(&self) -> &[B] {
        &self.images
    }

    pub fn apply(&self, a: &A) -> Option<&B> {
        self.table.get(a)
    }

    pub fn domain_order(&self) -> u128 {
        self.table.len() as u128
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.table.values().all(|b| seen.insert(b))
    }

    /// Image elements in sorted order.
    pub fn image_elements(&self) -> Vec<B> {
        let mut v: Vec<B> = self.table.values().cloned().collect();
        v.sort();
        v.dedup();
        v
    }
}

impl<A> GroupMap<A, A>
where
    A: Clone + Eq + std::hash::Hash + Ord,
{
    /// `self` followed by `other`; `other` must be defined on the image of `self`.
    pub fn then(&self, other: &GroupMap<A, A>) -> Option<GroupMap<A, A>> {
        let mut table = HashMap::with_capacity(self.table.len());
        for (a, b) in &self.table {
            table.insert(a.clone(), other.table.get(b)?.clone());
        }
        let images = self.gens.iter().map(|g| table[g].clone()).collect();
        Some(GroupMap { gens: self.gens.clone(), images, table })
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().all(|(a, b)| a == b)
    }

    /// Agreement on every domain element.
    pub fn same_map(&self, other: &GroupMap<A, A>) -> bool {
        self.table.len() == other.table.len() && self.table.iter().all(|(a, b)| other.table.get(a) == Some(b))
    }
}
