//! The two kinds of fusion system and the saturation predicates.

use std::sync::Arc;

use mcf_autact::Auto;
use mcf_groupkernel::{p_valuation, Caps, ElemSet, TableGroup};
use mcf_pgroup::PGroup;

use crate::error::{FusionError, Result};
use crate::generated::Generated;
use crate::local::Quotient;
use crate::realizable::{AutF, Realizable};

pub enum FusionSystem {
    Realizable(Box<Realizable>),
    Generated(Generated),
}

impl From<Realizable> for FusionSystem {
    fn from(r: Realizable) -> Self {
        FusionSystem::Realizable(Box::new(r))
    }
}

impl From<Generated> for FusionSystem {
    fn from(g: Generated) -> Self {
        FusionSystem::Generated(g)
    }
}

impl FusionSystem {
    pub fn sylow(&self) -> &PGroup {
        match self {
            FusionSystem::Realizable(r) => r.sylow(),
            FusionSystem::Generated(g) => g.sylow(),
        }
    }

    pub fn table(&self) -> &TableGroup {
        self.sylow().table()
    }

    pub fn prime(&self) -> u64 {
        self.sylow().prime()
    }

    pub fn caps(&self) -> &Caps {
        match self {
            FusionSystem::Realizable(r) => r.caps(),
            FusionSystem::Generated(g) => g.caps(),
        }
    }

    pub fn as_realizable(&self) -> Option<&Realizable> {
        match self {
            FusionSystem::Realizable(r) => Some(r),
            FusionSystem::Generated(_) => None,
        }
    }

    pub fn as_generated(&self) -> Option<&Generated> {
        match self {
            FusionSystem::Generated(g) => Some(g),
            FusionSystem::Realizable(_) => None,
        }
    }

    /// `Aut_F(P)`. Generated systems answer only at listed subgroups and `S`.
    pub fn aut_f(&self, p: &ElemSet) -> Result<Arc<AutF>> {
        match self {
            FusionSystem::Realizable(r) => r.aut_f(p),
            FusionSystem::Generated(g) => g.aut_f(p),
        }
    }

    /// `Out_F(P) = Aut_F(P)/Inn(P)`.
    pub fn out_f(&self, p: &ElemSet) -> Result<Quotient> {
        let a = self.aut_f(p)?;
        Quotient::new(&a.group, &a.inner)
    }

    /// `P^F`, sorted by canonical key.
    pub fn f_class(&self, p: &ElemSet) -> Vec<ElemSet> {
        match self {
            FusionSystem::Realizable(r) => r.f_class(p),
            FusionSystem::Generated(g) => g.f_class(p),
        }
    }

    /// `C_S(R) ≤ R` for every `R ∈ P^F`.
    pub fn is_centric(&self, p: &ElemSet) -> bool {
        let t = self.table();
        self.f_class(p).iter().all(|r| t.centralizer(r).is_subset(r))
    }

    pub fn is_fully_normalized(&self, p: &ElemSet) -> bool {
        let t = self.table();
        let own = TableGroup::order_of(&t.normalizer(p));
        self.f_class(p).iter().all(|r| TableGroup::order_of(&t.normalizer(r)) <= own)
    }

    pub fn is_fully_centralized(&self, p: &ElemSet) -> bool {
        let t = self.table();
        let own = TableGroup::order_of(&t.centralizer(p));
        self.f_class(p).iter().all(|r| TableGroup::order_of(&t.centralizer(r)) <= own)
    }

    /// `Aut_S(P)` is a Sylow subgroup of `Aut_F(P)`.
    pub fn is_fully_automized(&self, p: &ElemSet) -> Result<bool> {
        let a = self.aut_f(p)?;
        let q = self.prime();
        let full = (q as usize).pow(p_valuation(a.order() as u128, q));
        Ok(a.aut_s.len() == full)
    }

    /// Every `α ∈ Iso_F(R, P)` with `R ∈ P^F` extends to `N_α`. Realizable
    /// kind only.
    pub fn is_receptive(&self, p: &ElemSet) -> Result<bool> {
        let r = self
            .as_realizable()
            .ok_or_else(|| FusionError::Precondition("receptivity is decided only for realizable systems".into()))?;
        receptive(r, p)
    }
}

fn receptive(f: &Realizable, p: &ElemSet) -> Result<bool> {
    let t = f.table();
    let a = f.aut_f(p)?;
    let aut_s: std::collections::HashSet<u32> = a.aut_s.iter().copied().collect();
    // Representatives of the cosets `x·Aut_S(P)` in `Aut_F(P)`.
    let mut covered = vec![false; a.order()];
    let mut reps = Vec::new();
    for x in 0..a.order() as u32 {
        if covered[x as usize] {
            continue;
        }
        reps.push(x);
        for &c in &a.aut_s {
            covered[a.group.mul(x, c) as usize] = true;
        }
    }
    let class = f.f_class(p);
    let mut done: std::collections::HashSet<ElemSet> = std::collections::HashSet::new();
    for r in &class {
        if done.contains(r) {
            continue;
        }
        for m in f.s_orbit(r).members {
            done.insert(m);
        }
        let beta = f.some_iso(r, p).expect("member of the F-class");
        let r_elems: Vec<u32> = r.ones().map(|x| x as u32).collect();
        let r_gens = t.generating_set(r);
        let nr = t.normalizer(r);
        for &x in &reps {
            let ax = a.group.elem(x);
            let alpha: Vec<u32> = beta.iter().map(|&y| a.local.apply(ax, y)).collect();
            let mut inv = std::collections::HashMap::new();
            for (i, &y) in alpha.iter().enumerate() {
                inv.insert(y, r_elems[i]);
            }
            let at = |z: u32| alpha[r_elems.binary_search(&z).expect("element of R")];
            let mut n_alpha = t.empty_set();
            for g in nr.ones() {
                let m = a.local.auto_of(|y| at(t.conj(inv[&y], g as u32))).expect("image in P");
                if a.group.index_of(&m).is_some_and(|i| aut_s.contains(&i)) {
                    n_alpha.insert(g);
                }
            }
            let images: Vec<u32> = r_gens.iter().map(|&g| at(g)).collect();
            if !f.extends(&n_alpha, &r_gens, &images) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Maps an automorphism given on `S`-indices into `P`'s local numbering.
pub fn restrict(a: &AutF, on_s: &Auto) -> Option<Auto> {
    a.local.auto_of(|x| on_s.apply(x))
}
