//! Fusion systems given by generators: `Aut_F(S)` and `Aut_F(E)` for a list
//! of subgroups `E`.

use std::collections::HashSet;
use std::sync::Arc;

use mcf_autact::Auto;
use mcf_groupkernel::{Caps, ElemSet, TableGroup};
use mcf_pgroup::lattice::key;
use mcf_pgroup::PGroup;

use crate::error::{FusionError, Result};
use crate::local::{AutGroup, Local};
use crate::realizable::AutF;

/// A listed subgroup and the automizer generated for it.
#[derive(Clone, Debug)]
pub struct Listed {
    pub set: ElemSet,
    pub aut: Arc<AutF>,
}

/// `⟨Aut_F(S), Aut_F(E) | E listed⟩`.
#[derive(Clone, Debug)]
pub struct Generated {
    s: PGroup,
    aut_s: Arc<AutF>,
    listed: Vec<Listed>,
    caps: Caps,
}

fn build_autf(t: &TableGroup, set: &ElemSet, extra: &[Auto], restrict_from: Option<&AutGroup>, cap: usize) -> Result<AutF> {
    let local = Local::new(t, set);
    let inn_gens: Vec<Auto> = local.gens().iter().map(|&g| local.conj_auto(t, g)).collect();
    let norm = t.normalizer(set);
    let ns_gens: Vec<Auto> = t.generating_set(&norm).iter().map(|&g| local.conj_auto(t, g)).collect();
    let mut group = AutGroup::generate(local.order(), &ns_gens, cap)?;
    for a in extra {
        if a.images().len() != local.order() || !a.is_automorphism(local.table()) {
            return Err(FusionError::NotAutomorphism);
        }
        group.add_generator(a, cap)?;
    }
    if let Some(big) = restrict_from {
        for b in big.elements() {
            if let Some(r) = local.auto_of(|x| b.apply(x)) {
                group.add_generator(&r, cap)?;
            }
        }
    }
    let inner = group.subgroup(&inn_gens);
    let aut_s = group.subgroup(&ns_gens);
    Ok(AutF { local, group, inner, aut_s })
}

impl Generated {
    /// `aut_s` are automorphisms of `S` (image arrays on `S`-indices);
    /// `listed` pairs a subgroup with automorphisms in its local numbering.
    /// `Aut_S`-induced maps and restrictions from `Aut_F(S)` are added.
    pub fn new(s: PGroup, aut_s: &[Auto], listed: &[(ElemSet, Vec<Auto>)], caps: &Caps) -> Result<Self> {
        let t = s.table();
        let cap = caps.max_subgroup_enum;
        let top = build_autf(t, &t.full_set(), aut_s, None, cap)?;
        let mut out = Vec::new();
        let mut keys = HashSet::new();
        for (set, gens) in listed {
            if !t.is_subgroup(set) || set == &t.full_set() {
                return Err(FusionError::Precondition("listed entries must be proper subgroups of S".into()));
            }
            if !keys.insert(key(set)) {
                return Err(FusionError::Precondition("subgroup listed twice".into()));
            }
            let aut = build_autf(t, set, gens, Some(&top.group), cap)?;
            out.push(Listed { set: set.clone(), aut: Arc::new(aut) });
        }
        Ok(Generated { s, aut_s: Arc::new(top), listed: out, caps: *caps })
    }

    pub fn sylow(&self) -> &PGroup {
        &self.s
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn listed(&self) -> &[Listed] {
        &self.listed
    }

    /// Generators of `Aut_F(S)` as `S`-index automorphisms.
    pub fn aut_s_generators(&self) -> Vec<Auto> {
        self.aut_s.group.gens().to_vec()
    }

    pub fn aut_f(&self, p: &ElemSet) -> Result<Arc<AutF>> {
        if *p == self.s.full() {
            return Ok(self.aut_s.clone());
        }
        self.listed.iter().find(|l| l.set == *p).map(|l| l.aut.clone()).ok_or(FusionError::NotClosed)
    }

    /// `P^F`, by closing under `Aut_F(S)` and under `Aut_F(E)` for listed
    /// `E` containing the current subgroup.
    pub fn f_class(&self, p: &ElemSet) -> Vec<ElemSet> {
        let t = self.s.table();
        let mut seen: HashSet<ElemSet> = HashSet::from([p.clone()]);
        let mut queue = vec![p.clone()];
        let image = |a: &Auto, r: &ElemSet, l: Option<&Local>| -> ElemSet {
            let mut o = t.empty_set();
            for x in r.ones() {
                let y = match l {
                    None => a.apply(x as u32),
                    Some(l) => l.apply(a, x as u32),
                };
                o.insert(y as usize);
            }
            o
        };
        while let Some(r) = queue.pop() {
            let mut next = Vec::new();
            for a in self.aut_s.group.gens() {
                next.push(image(a, &r, None));
            }
            for l in &self.listed {
                if r.is_subset(&l.set) {
                    for a in l.aut.group.gens() {
                        next.push(image(a, &r, Some(&l.aut.local)));
                    }
                }
            }
            for n in next {
                if seen.insert(n.clone()) {
                    queue.push(n);
                }
            }
        }
        let mut v: Vec<ElemSet> = seen.into_iter().collect();
        v.sort_by_key(key);
        v
    }

    /// Drops the listed subgroups in the `S`-class of `p`.
    pub(crate) fn without_class(&self, p: &ElemSet) -> Result<Generated> {
        let t = self.s.table();
        let mut class: HashSet<ElemSet> = HashSet::new();
        for g in 0..t.size() as u32 {
            class.insert(t.conjugate_set(p, g));
        }
        if !self.listed.iter().any(|l| class.contains(&l.set)) {
            return Err(FusionError::NotListed);
        }
        let kept: Vec<(ElemSet, Vec<Auto>)> = self
            .listed
            .iter()
            .filter(|l| !class.contains(&l.set))
            .map(|l| (l.set.clone(), l.aut.group.gens().to_vec()))
            .collect();
        Generated::new(self.s.clone(), &self.aut_s_generators(), &kept, &self.caps)
    }
}
