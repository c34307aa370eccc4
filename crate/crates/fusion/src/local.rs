//! Subgroups of `S` with their own numbering, and groups of automorphisms
//! acting on them.

use std::collections::HashMap;

use mcf_autact::Auto;
use mcf_groupkernel::{ElemSet, GroupError, TableGroup};

use crate::error::Result;

const NONE: u32 = u32::MAX;

/// A subgroup `P ≤ S`; local index `i` is the `i`-th smallest `S`-index in `P`.
#[derive(Clone, Debug)]
pub struct Local {
    set: ElemSet,
    elems: Vec<u32>,
    pos: Vec<u32>,
    table: TableGroup,
    gens: Vec<u32>,
}

impl Local {
    pub fn new(s: &TableGroup, set: &ElemSet) -> Self {
        let (table, elems) = s.subgroup_table(set);
        let mut pos = vec![NONE; s.size()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let gens = table.gens().iter().map(|&i| elems[i as usize]).collect();
        Local { set: set.clone(), elems, pos, table, gens }
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn table(&self) -> &TableGroup {
        &self.table
    }

    /// Generators as `S`-indices.
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn global(&self, i: u32) -> u32 {
        self.elems[i as usize]
    }

    pub fn local(&self, x: u32) -> Option<u32> {
        match self.pos.get(x as usize) {
            Some(&i) if i != NONE => Some(i),
            _ => None,
        }
    }

    /// The automorphism of `P` induced by a map on `S`-indices, or `None`
    /// when some image leaves `P`.
    pub fn auto_of(&self, f: impl Fn(u32) -> u32) -> Option<Auto> {
        let mut img = Vec::with_capacity(self.elems.len());
        for &x in &self.elems {
            img.push(self.local(f(x))?);
        }
        Some(Auto::from_images(img))
    }

    /// Conjugation by `g ∈ N_S(P)`.
    pub fn conj_auto(&self, s: &TableGroup, g: u32) -> Auto {
        self.auto_of(|x| s.conj(x, g)).expect("element normalizes the subgroup")
    }

    /// `S`-index image of `x ∈ P` under a local automorphism.
    pub fn apply(&self, a: &Auto, x: u32) -> u32 {
        self.global(a.apply(self.local(x).expect("element of the subgroup")))
    }
}

/// A finite group of automorphisms, stored element by element.
#[derive(Clone, Debug)]
pub struct AutGroup {
    degree: usize,
    gens: Vec<Auto>,
    elems: Vec<Auto>,
    index: HashMap<Auto, u32>,
}

impl AutGroup {
    pub fn trivial(degree: usize) -> Self {
        let id = Auto::identity(degree);
        let index = HashMap::from([(id.clone(), 0)]);
        AutGroup { degree, gens: Vec::new(), elems: vec![id], index }
    }

    pub fn generate(degree: usize, gens: &[Auto], cap: usize) -> Result<Self> {
        let mut g = Self::trivial(degree);
        for a in gens {
            g.add_generator(a, cap)?;
        }
        Ok(g)
    }

    /// Adds a generator unless it is already present; returns whether the
    /// group grew.
    pub fn add_generator(&mut self, a: &Auto, cap: usize) -> Result<bool> {
        if self.index.contains_key(a) {
            return Ok(false);
        }
        self.gens.push(a.clone());
        let mut elems = self.elems.clone();
        let mut index: HashMap<Auto, u32> = HashMap::new();
        for e in &elems {
            index.insert(e.clone(), 0);
        }
        let mut k = 0;
        while k < elems.len() {
            let cur = elems[k].clone();
            k += 1;
            for g in &self.gens {
                let next = cur.then(g);
                if !index.contains_key(&next) {
                    if elems.len() >= cap {
                        return Err(GroupError::cap("automorphism group", elems.len() as u128 + 1, cap as u128).into());
                    }
                    index.insert(next.clone(), 0);
                    elems.push(next);
                }
            }
        }
        elems.sort();
        for (i, e) in elems.iter().enumerate() {
            index.insert(e.clone(), i as u32);
        }
        self.elems = elems;
        self.index = index;
        Ok(true)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn gens(&self) -> &[Auto] {
        &self.gens
    }

    pub fn elements(&self) -> &[Auto] {
        &self.elems
    }

    pub fn elem(&self, i: u32) -> &Auto {
        &self.elems[i as usize]
    }

    pub fn contains(&self, a: &Auto) -> bool {
        self.index.contains_key(a)
    }

    pub fn index_of(&self, a: &Auto) -> Option<u32> {
        self.index.get(a).copied()
    }

    pub fn mul(&self, i: u32, j: u32) -> u32 {
        self.index[&self.elems[i as usize].then(&self.elems[j as usize])]
    }

    /// Indices of the subgroup generated by `gens`, which must lie in the group.
    pub fn subgroup(&self, gens: &[Auto]) -> Vec<u32> {
        let gi: Vec<u32> = gens.iter().map(|g| self.index[g]).collect();
        let mut seen = vec![false; self.elems.len()];
        let mut out = vec![0u32];
        seen[0] = true;
        let mut k = 0;
        while k < out.len() {
            let a = out[k];
            k += 1;
            for &g in &gi {
                let b = self.mul(a, g);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    out.push(b);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Indices of the elements of order prime to `p`.
    pub fn p_prime_elements(&self, p: u64) -> Vec<u32> {
        (0..self.elems.len() as u32).filter(|&i| self.elems[i as usize].order() % p != 0).collect()
    }
}

/// `A/N` for a normal subgroup `N` of an automorphism group `A`.
#[derive(Clone, Debug)]
pub struct Quotient {
    table: TableGroup,
    coset_of: Vec<u32>,
    reps: Vec<u32>,
}

impl Quotient {
    pub fn new(a: &AutGroup, normal: &[u32]) -> Result<Self> {
        let n = a.order();
        let mut coset_of = vec![NONE; n];
        let mut reps = Vec::new();
        for x in 0..n as u32 {
            if coset_of[x as usize] != NONE {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &k in normal {
                coset_of[a.mul(k, x) as usize] = id;
            }
        }
        let elems: Vec<u32> = (0..reps.len() as u32).collect();
        let mut gens: Vec<u32> = a.gens().iter().map(|g| coset_of[a.index_of(g).expect("generator") as usize]).collect();
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        let table = TableGroup::from_elements(&elems, &gens, |&x, &y| {
            coset_of[a.mul(reps[x as usize], reps[y as usize]) as usize]
        })?;
        Ok(Quotient { table, coset_of, reps })
    }

    pub fn table(&self) -> &TableGroup {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Coset number of an element of the automorphism group.
    pub fn coset_of(&self, i: u32) -> u32 {
        self.coset_of[i as usize]
    }

    /// Least element index of each coset.
    pub fn reps(&self) -> &[u32] {
        &self.reps
    }
}
