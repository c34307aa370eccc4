//! The fusion system `F_S(G)` of a finite group on a Sylow subgroup.
//!
//! Every `F`-morphism is conjugation by some `h = s₁gs₂` with `g` a fixed
//! representative of the double coset `SgS`, so it factors as
//! `c_{s₁} ∘ π_g ∘ c_{s₂}` where `π_g` is conjugation by `g` on
//! `S ∩ gSg⁻¹`. All class and automizer computations use that factorization.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;
use std::sync::Arc;

use mcf_groupkernel::{p_valuation, Caps, ElemSet, FiniteGroup, GroupError, Subgroup, TableGroup};
use mcf_pgroup::lattice::key;
use mcf_pgroup::PGroup;

use crate::error::{FusionError, Result};
use crate::local::{AutGroup, Local};
use mcf_autact::Auto;

const NONE: u32 = u32::MAX;

/// Conjugation by a double-coset representative, as a partial map on `S`.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    /// `|SgS|`.
    pub size: u128,
    /// `S ∩ gSg⁻¹`.
    pub domain: ElemSet,
    pi: Vec<u32>,
}

impl DoubleCoset {
    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.pi[x as usize]
    }
}

/// Members of an `S`-class with, for each, an element `s` with `P^s` equal
/// to the member.
#[derive(Clone, Debug)]
pub struct SOrbit {
    pub members: Vec<ElemSet>,
    pub conjugators: Vec<u32>,
}

/// `F_S(G)`, reduced to data on `S`.
pub struct Realizable {
    s: PGroup,
    ambient_order: u128,
    cosets: Vec<DoubleCoset>,
    /// `conj[u * n + v]`: all `s` with `u^s = v`.
    conj: Vec<Vec<u32>>,
    caps: Caps,
    aut_cache: Mutex<HashMap<Vec<u32>, Arc<AutF>>>,
}

/// `Aut_F(P)` together with its inner and `S`-induced parts.
#[derive(Clone, Debug)]
pub struct AutF {
    pub local: Local,
    pub group: AutGroup,
    /// Indices of `Inn(P)`.
    pub inner: Vec<u32>,
    /// Indices of `Aut_S(P)`.
    pub aut_s: Vec<u32>,
}

impl AutF {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn out_order(&self) -> usize {
        self.group.order() / self.inner.len()
    }
}

fn canonical<G: FiniteGroup>(g: &G, s: &[G::Elem], x: &G::Elem) -> G::Elem {
    s.iter().map(|a| g.mul(a, x)).min().expect("nonempty subgroup")
}

impl Realizable {
    /// Builds `F_S(G)`; `S` must be a Sylow `p`-subgroup of `G`.
    pub fn new<G: FiniteGroup>(
        g: &G,
        s: &Subgroup<G::Elem>,
        caps: &Caps,
        label: impl Fn(&G::Elem) -> String,
    ) -> Result<Self> {
        let order = g.order();
        let so = s.order();
        let primes = mcf_groupkernel::prime_divisors(so);
        if primes.len() != 1 {
            return Err(FusionError::Precondition(format!("subgroup of order {so} is not a nontrivial p-group")));
        }
        let p = primes[0];
        if so != (p as u128).pow(p_valuation(order, p)) {
            return Err(FusionError::NotSylow { p, order: so, group_order: order });
        }
        if order > caps.max_scan {
            return Err(GroupError::cap("ambient coset enumeration", order, caps.max_scan).into());
        }
        let mut elems: Vec<G::Elem> = s.elements().to_vec();
        elems.sort();
        let id = g.identity();
        let at = elems.iter().position(|e| *e == id).expect("identity in subgroup");
        let idv = elems.remove(at);
        elems.insert(0, idv);
        let table = TableGroup::from_elements(&elems, s.gens(), |a, b| g.mul(a, b))?;
        let labels: Vec<String> = elems.iter().map(&label).collect();
        let pg = PGroup::from_table(table, labels)?;
        let n = elems.len();
        let index: HashMap<&G::Elem, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();

        let gens = g.generators();
        let mut reps: Vec<G::Elem> = vec![canonical(g, &elems, &id)];
        let mut seen: HashMap<G::Elem, usize> = HashMap::from([(reps[0].clone(), 0)]);
        let mut k = 0;
        while k < reps.len() {
            let r = reps[k].clone();
            k += 1;
            for x in &gens {
                let c = canonical(g, &elems, &g.mul(&r, x));
                if !seen.contains_key(&c) {
                    seen.insert(c.clone(), reps.len());
                    reps.push(c);
                }
            }
        }
        let mut orbit_of = vec![usize::MAX; reps.len()];
        let mut cosets = Vec::new();
        let sgens: Vec<G::Elem> = s.gens().to_vec();
        for start in 0..reps.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id_orb = cosets.len();
            orbit_of[start] = id_orb;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let r = reps[orbit[i]].clone();
                i += 1;
                for x in &sgens {
                    let c = seen[&canonical(g, &elems, &g.mul(&r, x))];
                    if orbit_of[c] == usize::MAX {
                        orbit_of[c] = id_orb;
                        orbit.push(c);
                    }
                }
            }
            let rep = orbit.iter().map(|&i| &reps[i]).min().expect("nonempty orbit").clone();
            let ginv = g.inv(&rep);
            let mut pi = vec![NONE; n];
            let mut domain = ElemSet::with_capacity(n);
            for (i, e) in elems.iter().enumerate() {
                let y = g.mul(&g.mul(&ginv, e), &rep);
                if let Some(&j) = index.get(&y) {
                    pi[i] = j;
                    domain.insert(i);
                }
            }
            cosets.push(DoubleCoset { size: orbit.len() as u128 * so, domain, pi });
        }
        debug_assert_eq!(cosets.iter().map(|c| c.size).sum::<u128>(), order);
        Ok(Self::from_parts(pg, order, cosets, caps))
    }

    fn from_parts(s: PGroup, ambient_order: u128, cosets: Vec<DoubleCoset>, caps: &Caps) -> Self {
        let t = s.table();
        let n = t.size();
        let mut conj = vec![Vec::new(); n * n];
        for g in 0..n as u32 {
            for u in 0..n as u32 {
                conj[u as usize * n + t.conj(u, g) as usize].push(g);
            }
        }
        Realizable { s, ambient_order, cosets, conj, caps: *caps, aut_cache: Mutex::new(HashMap::new()) }
    }

    pub fn sylow(&self) -> &PGroup {
        &self.s
    }

    pub fn table(&self) -> &TableGroup {
        self.s.table()
    }

    pub fn ambient_order(&self) -> u128 {
        self.ambient_order
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn double_cosets(&self) -> &[DoubleCoset] {
        &self.cosets
    }

    /// All `s` with `u^s = v`.
    pub fn conjugators(&self, u: u32, v: u32) -> &[u32] {
        &self.conj[u as usize * self.table().size() + v as usize]
    }

    fn image_set(&self, dc: &DoubleCoset, set: &ElemSet) -> ElemSet {
        let mut out = self.table().empty_set();
        for x in set.ones() {
            out.insert(dc.pi[x] as usize);
        }
        out
    }

    /// The `S`-class of `P` with conjugators from `P`.
    pub fn s_orbit(&self, p: &ElemSet) -> SOrbit {
        let t = self.table();
        let mut members = vec![p.clone()];
        let mut conjugators = vec![0u32];
        let mut seen: HashMap<ElemSet, ()> = HashMap::from([(p.clone(), ())]);
        let mut k = 0;
        while k < members.len() {
            let (cur, c) = (members[k].clone(), conjugators[k]);
            k += 1;
            for &g in t.gens() {
                let next = t.conjugate_set(&cur, g);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    members.push(next);
                    conjugators.push(t.mul(c, g));
                }
            }
        }
        SOrbit { members, conjugators }
    }

    /// `P^F`, sorted by canonical key.
    pub fn f_class(&self, p: &ElemSet) -> Vec<ElemSet> {
        let orbit = self.s_orbit(p);
        let mut found: HashSet<ElemSet> = HashSet::new();
        for dc in &self.cosets {
            for q in &orbit.members {
                if q.is_subset(&dc.domain) {
                    let r = self.image_set(dc, q);
                    if !found.contains(&r) {
                        for m in self.s_orbit(&r).members {
                            found.insert(m);
                        }
                    }
                }
            }
        }
        let mut v: Vec<ElemSet> = found.into_iter().collect();
        v.sort_by_key(key);
        v
    }

    /// `Aut_F(P)`, built from `Aut_S(P)` and one map per double coset and
    /// `S`-conjugate of `P` landing back in the `S`-class of `P`.
    pub fn aut_f(&self, p: &ElemSet) -> Result<Arc<AutF>> {
        let k = key(p);
        if let Some(a) = self.aut_cache.lock().expect("cache lock").get(&k) {
            return Ok(a.clone());
        }
        let t = self.table();
        let local = Local::new(t, p);
        let cap = self.caps.max_subgroup_enum;
        let inn_gens: Vec<Auto> = local.gens().iter().map(|&g| local.conj_auto(t, g)).collect();
        let norm = t.normalizer(p);
        let ns_gens: Vec<Auto> = t.generating_set(&norm).iter().map(|&g| local.conj_auto(t, g)).collect();
        let mut group = AutGroup::generate(local.order(), &ns_gens, cap)?;
        let orbit = self.s_orbit(p);
        let pos: HashMap<&ElemSet, usize> = orbit.members.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for dc in &self.cosets {
            for (q, &s1) in orbit.members.iter().zip(&orbit.conjugators) {
                if !q.is_subset(&dc.domain) {
                    continue;
                }
                let r = self.image_set(dc, q);
                if let Some(&j) = pos.get(&r) {
                    let back = t.inverse(orbit.conjugators[j]);
                    let a = local
                        .auto_of(|x| t.conj(dc.pi[t.conj(x, s1) as usize], back))
                        .expect("map returns to P");
                    group.add_generator(&a, cap)?;
                }
            }
        }
        let inner = group.subgroup(&inn_gens);
        let aut_s = group.subgroup(&ns_gens);
        let out = Arc::new(AutF { local, group, inner, aut_s });
        self.aut_cache.lock().expect("cache lock").insert(k, out.clone());
        Ok(out)
    }

    /// One `F`-isomorphism `R → P`, as `S`-images of the elements of `R` in
    /// increasing order, or `None` when `R ∉ P^F`.
    pub fn some_iso(&self, r: &ElemSet, p: &ElemSet) -> Option<Vec<u32>> {
        let t = self.table();
        let ro = self.s_orbit(r);
        let target = self.s_orbit(p);
        let pos: HashMap<&ElemSet, usize> = target.members.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for dc in &self.cosets {
            for (q, &s1) in ro.members.iter().zip(&ro.conjugators) {
                if !q.is_subset(&dc.domain) {
                    continue;
                }
                if let Some(&j) = pos.get(&self.image_set(dc, q)) {
                    let back = t.inverse(target.conjugators[j]);
                    return Some(r.ones().map(|x| t.conj(dc.pi[t.conj(x as u32, s1) as usize], back)).collect());
                }
            }
        }
        None
    }

    /// Whether some `F`-morphism defined on `N` restricts to `alpha` on `R`.
    /// `alpha` maps `R`'s generators `r_gens` to `images`.
    pub fn extends(&self, n: &ElemSet, r_gens: &[u32], images: &[u32]) -> bool {
        let t = self.table();
        let n_gens = t.generating_set(n);
        for dc in &self.cosets {
            for s1 in 0..t.size() as u32 {
                if !n_gens.iter().all(|&x| dc.domain.contains(t.conj(x, s1) as usize)) {
                    continue;
                }
                let Some((&r0, rest)) = r_gens.split_first() else {
                    return true;
                };
                let u = dc.pi[t.conj(r0, s1) as usize];
                for &s2 in self.conjugators(u, images[0]) {
                    if rest
                        .iter()
                        .zip(&images[1..])
                        .all(|(&x, &y)| t.conj(dc.pi[t.conj(x, s1) as usize], s2) == y)
                    {
                        return true;
                    }
                }
            }
        }
        false
    }
}
