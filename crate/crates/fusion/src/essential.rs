//! Essential subgroups, pearls and normalizer towers.

use std::collections::{HashMap, HashSet};

use mcf_groupkernel::{ElemSet, TableGroup};
use mcf_pgroup::lattice::{all_subgroups, conjugacy_classes, key};
use mcf_pgroup::profile::is_extraspecial;
use mcf_pgroup::{Structure, SubgroupSummary};
use serde::{Deserialize, Serialize};

use crate::error::{FusionError, Result};
use crate::spe::{has_strongly_p_embedded, SpeOutcome};
use crate::system::FusionSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    AbelianPearl,
    ExtraspecialPearl,
    QuaternionPearl,
    Gamma1,
    CZ2,
    Other,
}

impl ClassTag {
    pub fn is_pearl(self) -> bool {
        matches!(self, ClassTag::AbelianPearl | ClassTag::ExtraspecialPearl | ClassTag::QuaternionPearl)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Brute,
    TheoremD,
}

#[derive(Clone, Debug, Serialize)]
pub struct EssentialReport {
    #[serde(skip)]
    pub set: ElemSet,
    pub subgroup: SubgroupSummary,
    pub class_tag: ClassTag,
    pub out_order: usize,
    /// Order of the strongly p-embedded witness inside `Out_F(E)`.
    pub witness_order: usize,
    /// `i` with `E` conjugate to `H_i` or `B_i`.
    pub index: Option<u64>,
    pub s_class_size: usize,
    pub f_class_size: usize,
}

/// Isomorphism type test for the pearl shapes: `C_p × C_p`, `p^{1+2}` of
/// exponent `p` for odd `p`, `Q₈` for `p = 2`.
pub fn pearl_shape(t: &TableGroup, e: &ElemSet, p: u64) -> Option<ClassTag> {
    let order = TableGroup::order_of(e) as u64;
    let exp_p = e.ones().all(|x| t.elem_order_of(x as u32) as u64 <= p);
    if order == p * p && exp_p {
        return Some(ClassTag::AbelianPearl);
    }
    if order == p * p * p && p > 2 && exp_p && is_extraspecial(t, e, p) {
        return Some(ClassTag::ExtraspecialPearl);
    }
    if order == 8 && p == 2 && !t.is_abelian(e) && e.ones().filter(|&x| t.elem_order_of(x as u32) == 2).count() == 1 {
        return Some(ClassTag::QuaternionPearl);
    }
    None
}

/// The elements `x` and `s₁` that index pearls: `x` is the least element of
/// order `p` outside `γ₁ ∪ C_S(Z₂)` (the least outside at all when none has
/// order `p`), `s₁` the least element of `γ₁ \ γ₂`.
pub fn pearl_basis(t: &TableGroup, st: &Structure) -> Option<(u32, u32)> {
    let g1 = st.gamma1.as_ref()?;
    let g2 = st.gamma(2);
    let outside: Vec<u32> = (0..t.size() as u32).filter(|&x| st.outside_both(x)).collect();
    let x = outside
        .iter()
        .copied()
        .find(|&x| t.elem_order_of(x) as u64 == st.p)
        .or_else(|| outside.first().copied())?;
    let s1 = g1.ones().find(|&y| !g2.contains(y))? as u32;
    Some((x, s1))
}

/// Tag and `H_i`/`B_i` index for an essential subgroup.
pub fn classify_pearl(f: &FusionSystem, e: &ElemSet) -> (ClassTag, Option<u64>) {
    let s = f.sylow();
    let t = s.table();
    let st = Structure::new(s);
    let p = st.p;
    if let Some(tag) = pearl_shape(t, e, p) {
        return (tag, pearl_index(t, &st, e));
    }
    if st.gamma1.as_ref() == Some(e) {
        (ClassTag::Gamma1, None)
    } else if st.cz2.as_ref() == Some(e) {
        (ClassTag::CZ2, None)
    } else {
        (ClassTag::Other, None)
    }
}

/// Writes the least `t ∈ E` outside `γ₁ ∪ C_S(Z₂)` as `x^j s₁^k` modulo
/// `γ₂` and returns `k/j mod p`.
pub fn pearl_index(t: &TableGroup, st: &Structure, e: &ElemSet) -> Option<u64> {
    let (x, s1) = pearl_basis(t, st)?;
    let g2 = st.gamma(2);
    let w = e.ones().map(|y| y as u32).find(|&y| st.outside_both(y))?;
    let p = st.p;
    for j in 1..p {
        for k in 0..p {
            let c = t.mul(t.power(x, j), t.power(s1, k));
            if g2.contains(t.mul(t.inverse(c), w) as usize) {
                let jinv = (1..p).find(|&u| (u * j) % p == 1).expect("p prime");
                return Some(k * jinv % p);
            }
        }
    }
    None
}

/// `N⁰ = P`, `Nⁱ = N_S(Nⁱ⁻¹)`, until the sequence stops growing.
pub fn normalizer_tower(t: &TableGroup, p: &ElemSet) -> Vec<ElemSet> {
    let mut tower = vec![p.clone()];
    loop {
        let n = t.normalizer(tower.last().expect("nonempty"));
        if &n == tower.last().expect("nonempty") {
            return tower;
        }
        tower.push(n);
    }
}

/// The necessary condition `|E/Φ(E)| ≥ |N_S(E)/E|²`.
pub fn passes_frattini_bound(t: &TableGroup, e: &ElemSet, p: u64) -> bool {
    let phi = t.frattini_pgroup(e, p);
    let ef = TableGroup::order_of(e) / TableGroup::order_of(&phi);
    let ne = TableGroup::order_of(&t.normalizer(e)) / TableGroup::order_of(e);
    ef >= ne * ne
}

/// Some characteristic subgroups of `E`, closed under products and
/// intersections.
fn characteristic_family(t: &TableGroup, e: &ElemSet, p: u64) -> Vec<ElemSet> {
    let mut fam: Vec<ElemSet> = vec![
        e.clone(),
        t.frattini_pgroup(e, p),
        t.center_of(e),
        t.derived(e),
        t.omega(e, p),
        t.agemo(e, p),
        t.trivial(),
    ];
    fam.retain(|x| t.is_subgroup(x));
    loop {
        let mut seen: HashSet<ElemSet> = fam.iter().cloned().collect();
        let mut grew = false;
        for i in 0..fam.len() {
            for j in 0..i {
                for c in [TableGroup::intersection(&fam[i], &fam[j]), t.join(&fam[i], &fam[j])] {
                    if seen.insert(c.clone()) {
                        fam.push(c);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return fam;
        }
    }
}

/// Whether some `a ∈ N_S(E)` acting non-innerly stabilizes a characteristic
/// series of `E` ending inside `Φ(E)`; such `E` cannot be essential.
pub fn stabilized_series(t: &TableGroup, e: &ElemSet, p: u64) -> bool {
    let fam = characteristic_family(t, e, p);
    let phi = t.frattini_pgroup(e, p);
    let inner = t.join(e, &t.centralizer(e));
    let norm = t.normalizer(e);
    norm.ones().filter(|&a| !inner.contains(a)).any(|a| {
        let a = a as u32;
        let mut q = e.clone();
        loop {
            if q.is_subset(&phi) {
                return true;
            }
            let mut br = t.trivial();
            for x in q.ones() {
                br.insert(t.comm(x as u32, a) as usize);
            }
            let next = fam
                .iter()
                .filter(|c| br.is_subset(c) && c.is_subset(&q))
                .min_by_key(|c| TableGroup::order_of(c))
                .expect("q itself qualifies")
                .clone();
            if next == q {
                return false;
            }
            q = next;
        }
    })
}

/// Full report for a fully normalized candidate, or `None` when it is not
/// essential.
pub fn essential_report(f: &FusionSystem, e: &ElemSet) -> Result<Option<EssentialReport>> {
    let t = f.table();
    let p = f.prime();
    if *e == t.full_set() || !f.is_centric(e) || !f.is_fully_normalized(e) {
        return Ok(None);
    }
    let out = f.out_f(e)?;
    let SpeOutcome::Witness(m) = has_strongly_p_embedded(out.table(), p) else {
        return Ok(None);
    };
    let (class_tag, index) = classify_pearl(f, e);
    let mut s_class = HashSet::new();
    for g in 0..t.size() as u32 {
        s_class.insert(t.conjugate_set(e, g));
    }
    Ok(Some(EssentialReport {
        set: e.clone(),
        subgroup: f.sylow().summary(e),
        class_tag,
        out_order: out.order(),
        witness_order: TableGroup::order_of(&m),
        index,
        s_class_size: s_class.len(),
        f_class_size: f.f_class(e).len(),
    }))
}

/// `F`-essential subgroups up to `S`-conjugacy, sorted by order then key.
pub fn essential_subgroups(f: &FusionSystem, mode: Mode) -> Result<Vec<EssentialReport>> {
    let candidates = match (f, mode) {
        (FusionSystem::Generated(g), _) => g.listed().iter().map(|l| l.set.clone()).collect(),
        (FusionSystem::Realizable(_), Mode::Brute) => brute_candidates(f)?,
        (FusionSystem::Realizable(_), Mode::TheoremD) => theorem_d_candidates(f)?,
    };
    let mut out = Vec::new();
    for e in candidates {
        if let Some(r) = essential_report(f, &e)? {
            out.push(r);
        }
    }
    out.sort_by_key(|r| (TableGroup::order_of(&r.set), key(&r.set)));
    Ok(out)
}

/// One representative per `S`-class of proper subgroups whose `F`-class
/// consists of centric subgroups; only fully normalized classes are kept.
fn brute_candidates(f: &FusionSystem) -> Result<Vec<ElemSet>> {
    let t = f.table();
    let p = f.prime();
    let full = t.full_set();
    let layers = all_subgroups(t, &full, p, f.caps().max_subgroup_enum)?;
    let subs: Vec<ElemSet> = layers.into_iter().flatten().filter(|h| *h != full).collect();
    let classes = conjugacy_classes(t, &subs, t.gens());
    let class_of: HashMap<&ElemSet, usize> =
        classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |m| (m, i))).collect();
    let mut done = vec![false; classes.len()];
    let mut out = Vec::new();
    for i in 0..classes.len() {
        if done[i] {
            continue;
        }
        let fc = f.f_class(&classes[i][0]);
        let ids: Vec<usize> = {
            let mut v: Vec<usize> = fc.iter().map(|m| class_of[m]).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        for &j in &ids {
            done[j] = true;
        }
        if !fc.iter().all(|r| t.centralizer(r).is_subset(r)) {
            continue;
        }
        let norm = |j: usize| TableGroup::order_of(&t.normalizer(&classes[j][0]));
        let best = ids.iter().map(|&j| norm(j)).max().expect("nonempty class");
        out.extend(ids.iter().filter(|&&j| norm(j) == best).map(|&j| classes[j][0].clone()));
    }
    Ok(out)
}

/// `⟨t⟩Z(S)` and `⟨t⟩Z₂(S)` for `t ∉ γ₁ ∪ C_S(Z₂)`, together with `γ₁` and
/// `C_S(Z₂)`, one per `S`-class, after the series and Frattini filters.
fn theorem_d_candidates(f: &FusionSystem) -> Result<Vec<ElemSet>> {
    let s = f.sylow();
    let t = s.table();
    let st = Structure::new(s);
    let (Some(g1), Some(cz2)) = (st.gamma1.clone(), st.cz2.clone()) else {
        return Err(FusionError::NotMaximalClass);
    };
    let p = st.p;
    let (z1, z2) = (st.z(1), st.z(2));
    let mut raw: Vec<ElemSet> = vec![g1, cz2];
    for x in 0..t.size() as u32 {
        if st.outside_both(x) {
            raw.push(t.extend(&z1, &[x]));
            raw.push(t.extend(&z2, &[x]));
        }
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for e in raw {
        if seen.contains(&e) {
            continue;
        }
        for g in 0..t.size() as u32 {
            seen.insert(t.conjugate_set(&e, g));
        }
        if passes_frattini_bound(t, &e, p) && !stabilized_series(t, &e, p) {
            out.push(e);
        }
    }
    Ok(out)
}
