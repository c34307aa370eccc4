use std::collections::VecDeque;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: u32,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Perm>,
    /// Orbit of `base` in BFS order.
    orbit: Vec<u32>,
    /// `transversal[b]` maps `base` to `b` for every orbit point.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        Level { base, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; degree] }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.orbit.clear();
        self.transversal[self.base as usize] = Some(Perm::identity(degree));
        self.orbit.push(self.base);
        let mut queue = VecDeque::from([self.base]);
        while let Some(b) = queue.pop_front() {
            let ub = self.transversal[b as usize].clone().expect("orbit point");
            for g in &self.gens {
                let c = g.image(b);
                if self.transversal[c as usize].is_none() {
                    self.transversal[c as usize] = Some(ub.mul(g));
                    self.orbit.push(c);
                    queue.push_back(c);
                }
            }
        }
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
    order: u128,
}

impl PermGroup {
    /// Deterministic Schreier–Sims for the given generator order.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let mut grp = PermGroup { degree, gens: gens.clone(), levels: Vec::new(), order: 1 };
        grp.schreier_sims();
        Ok(grp)
    }

    /// Infers the degree from the first generator; an empty list needs `new`.
    pub fn from_gens(gens: Vec<Perm>) -> Result<Self> {
        let degree = gens.first().map(|g| g.degree()).ok_or_else(|| {
            GroupError::Precondition("no generators; use PermGroup::new with a degree".into())
        })?;
        PermGroup::new(degree, gens)
    }

    fn schreier_sims(&mut self) {
        let n = self.degree;
        for g in self.gens.clone() {
            if g.is_identity() {
                continue;
            }
            if !self.levels.iter().any(|l| g.image(l.base) != l.base) {
                self.levels.push(Level::new(g.first_moved().expect("non-identity"), n));
            }
        }
        for j in 0..self.levels.len() {
            let fixed: Vec<u32> = self.levels[..j].iter().map(|l| l.base).collect();
            let gens: Vec<Perm> = self
                .gens
                .iter()
                .filter(|g| !g.is_identity() && fixed.iter().all(|&b| g.image(b) == b))
                .cloned()
                .collect();
            self.levels[j].gens = gens;
            self.levels[j].rebuild_orbit(n);
        }
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut clean = true;
            'outer: for bi in 0..self.levels[lvl].orbit.len() {
                let b = self.levels[lvl].orbit[bi];
                for gi in 0..self.levels[lvl].gens.len() {
                    let x = &self.levels[lvl].gens[gi];
                    let ub = self.levels[lvl].transversal[b as usize].as_ref().expect("orbit");
                    let bx = x.image(b);
                    let ubx = self.levels[lvl].transversal[bx as usize].as_ref().expect("orbit");
                    let h = ub.mul(x).mul(&ubx.inv());
                    let (res, j) = self.strip(&h, lvl + 1);
                    if j < self.levels.len() || !res.is_identity() {
                        clean = false;
                        if j == self.levels.len() {
                            let pt = res.first_moved().expect("non-identity residue");
                            self.levels.push(Level::new(pt, n));
                        }
                        for l in (lvl + 1)..=j {
                            self.levels[l].gens.push(res.clone());
                            self.levels[l].rebuild_orbit(n);
                        }
                        i = j + 1;
                        break 'outer;
                    }
                }
            }
            if clean {
                i -= 1;
            }
        }
        self.order = self.levels.iter().map(|l| l.orbit.len() as u128).product();
    }

    /// Sifts `g` from level `start`; returns the residue and the level where
    /// sifting stopped (`levels.len()` when it passed every level).
    fn strip(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for j in start..self.levels.len() {
            let lvl = &self.levels[j];
            let b = h.image(lvl.base);
            match &lvl.transversal[b as usize] {
                None => return (h, j),
                Some(u) => h = h.mul(&u.inv()),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the fundamental orbits along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn has(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, j) = self.strip(g, 0);
        j == self.levels.len() && res.is_identity()
    }

    fn visit_rec(&self, level: usize, acc: &Perm, f: &mut dyn FnMut(&Perm) -> bool) -> bool {
        if level == 0 {
            return f(acc);
        }
        let l = &self.levels[level - 1];
        for &b in &l.orbit {
            let u = l.transversal[b as usize].as_ref().expect("orbit");
            let next = acc.mul(u);
            if !self.visit_rec(level - 1, &next, f) {
                return false;
            }
        }
        true
    }

    /// Subgroup generated by `gens`, rejecting elements outside `self`.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        if gens.iter().any(|g| !self.has(g)) {
            return Err(GroupError::ElementOutsideParent);
        }
        PermGroup::new(self.degree, gens)
    }

    /// Normal closure of `gens` under conjugation by `self`.
    pub fn normal_closure(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        let mut cur = PermGroup::new(self.degree, gens)?;
        loop {
            let mut added = None;
            'scan: for h in cur.gens.clone() {
                for g in &self.gens {
                    let c = g.inv().mul(&h).mul(g);
                    if !cur.has(&c) {
                        added = Some(c);
                        break 'scan;
                    }
                }
            }
            match added {
                None => return Ok(cur),
                Some(c) => {
                    let mut gs = cur.gens.clone();
                    gs.push(c);
                    cur = PermGroup::new(self.degree, gs)?;
                }
            }
        }
    }

    /// The commutator subgroup G′.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.inv().mul(&b.inv()).mul(a).mul(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(comms)
    }

    /// Point stabilizer orbit of `pt` under the generators.
    pub fn orbit(&self, pt: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[pt as usize] = true;
        let mut out = vec![pt];
        let mut k = 0;
        while k < out.len() {
            let b = out[k];
            k += 1;
            for g in &self.gens {
                let c = g.image(b);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    out.push(c);
                }
            }
        }
        out
    }
}

impl FiniteGroup for PermGroup {
    type Elem = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.mul(b)
    }

    fn inv(&self, a: &Perm) -> Perm {
        a.inv()
    }

    fn generators(&self) -> Vec<Perm> {
        self.gens.clone()
    }

    fn order(&self) -> u128 {
        self.order
    }

    fn contains(&self, a: &Perm) -> bool {
        self.has(a)
    }

    fn visit_elements(&self, f: &mut dyn FnMut(&Perm) -> bool) {
        let id = Perm::identity(self.degree);
        self.visit_rec(self.levels.len(), &id, f);
    }

    fn elem_order(&self, a: &Perm) -> u64 {
        a.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use std::collections::HashSet;

    fn cyc(n: usize, c: &[u32]) -> Perm {
        Perm::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn sym4_order() {
        let g = PermGroup::new(4, vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn four_cycle_contains_double_transposition() {
        let g = PermGroup::new(4, vec![cyc(4, &[0, 1, 2, 3])]).unwrap();
        let d = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        assert!(g.contains(&d));
        assert!(!g.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err = PermGroup::new(4, vec![cyc(3, &[0, 1])]).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
    }

    #[test]
    fn pgl27_order_matches_formula_and_enumeration() {
        let g = construct::pgl2(7).unwrap();
        let q: u128 = 7;
        assert_eq!(g.order(), q * (q * q - 1));
        let elems = g.elements(1000).unwrap();
        let set: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 336);
        assert!(elems.iter().all(|e| g.contains(e)));
    }

    #[test]
    fn orbit_product_equals_enumeration() {
        for g in [construct::sym(5).unwrap(), construct::alt(6).unwrap(), construct::psl2(11).unwrap()]
        {
            let prod: usize = g.orbit_lengths().iter().product();
            let n = g.elements(100_000).unwrap().into_iter().collect::<HashSet<_>>().len();
            assert_eq!(prod, n);
            assert_eq!(g.order(), n as u128);
        }
    }

    #[test]
    fn derived_subgroup_of_sym() {
        let s5 = construct::sym(5).unwrap();
        assert_eq!(s5.derived_subgroup().unwrap().order(), 60);
        let s4 = construct::sym(4).unwrap();
        assert_eq!(s4.derived_subgroup().unwrap().order(), 12);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(3, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.elements(10).unwrap(), vec![Perm::identity(3)]);
    }
}
