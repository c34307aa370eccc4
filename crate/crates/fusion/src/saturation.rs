//! Saturation checks: the exhaustive oracle for realizable systems, the
//! spot-check for generated ones, and pearl pruning.

use std::collections::{HashMap, HashSet};

use mcf_groupkernel::{ElemSet, TableGroup};
use mcf_pgroup::lattice::{all_subgroups, conjugacy_classes};
use mcf_pgroup::SubgroupSummary;
use serde::Serialize;

use crate::error::{FusionError, Result};
use crate::essential::{essential_report, pearl_shape};
use crate::generated::Generated;
use crate::system::FusionSystem;

#[derive(Clone, Debug, Serialize)]
pub struct SaturationReport {
    pub f_classes: usize,
    pub failures: Vec<SubgroupSummary>,
}

impl SaturationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `F`-class of subgroups, looks for a member that is fully
/// automized and receptive. Realizable systems only.
pub fn saturation_oracle(f: &FusionSystem) -> Result<SaturationReport> {
    if f.as_realizable().is_none() {
        return Err(FusionError::Precondition("the exhaustive oracle needs a realizable system".into()));
    }
    let t = f.table();
    let full = t.full_set();
    let layers = all_subgroups(t, &full, f.prime(), f.caps().max_subgroup_enum)?;
    let subs: Vec<ElemSet> = layers.into_iter().flatten().collect();
    let classes = conjugacy_classes(t, &subs, t.gens());
    let class_of: HashMap<&ElemSet, usize> =
        classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |m| (m, i))).collect();
    let mut done = vec![false; classes.len()];
    let mut report = SaturationReport { f_classes: 0, failures: Vec::new() };
    for i in 0..classes.len() {
        if done[i] {
            continue;
        }
        report.f_classes += 1;
        let fc = f.f_class(&classes[i][0]);
        let mut ids: Vec<usize> = fc.iter().map(|m| class_of[m]).collect();
        ids.sort_unstable();
        ids.dedup();
        for &j in &ids {
            done[j] = true;
        }
        // Fully normalized members first.
        ids.sort_by_key(|&j| std::cmp::Reverse(TableGroup::order_of(&t.normalizer(&classes[j][0]))));
        let mut ok = false;
        for &j in &ids {
            let r = &classes[j][0];
            if f.is_fully_automized(r)? && f.is_receptive(r)? {
                ok = true;
                break;
            }
        }
        if !ok {
            report.failures.push(f.sylow().summary(&classes[i][0]));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct SpotCheck {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// At `S` and every listed subgroup: `Aut_S(E)` is Sylow in `Aut_F(E)`, and
/// every element of `N_{Aut_F(E)}(Aut_S(E))` is the restriction of an
/// element of `Aut_F(S)`.
pub fn saturation_spot_check(g: &Generated) -> Result<SpotCheck> {
    let f_owned = FusionSystem::Generated(g.clone());
    let t = g.sylow().table();
    let top = g.aut_f(&t.full_set())?;
    let mut failures = Vec::new();
    if !f_owned.is_fully_automized(&t.full_set())? {
        failures.push("Aut_S(S) is not Sylow in Aut_F(S)".to_string());
    }
    for (k, l) in g.listed().iter().enumerate() {
        if !f_owned.is_fully_automized(&l.set)? {
            failures.push(format!("listed subgroup {k} is not fully automized"));
        }
        let a = &l.aut;
        let aut_s: HashSet<u32> = a.aut_s.iter().copied().collect();
        let restricted: HashSet<u32> = top
            .group
            .elements()
            .iter()
            .filter_map(|b| a.local.auto_of(|x| b.apply(x)))
            .filter_map(|r| a.group.index_of(&r))
            .collect();
        for x in 0..a.order() as u32 {
            let xi = a.group.elem(x).inverse();
            let xi = a.group.index_of(&xi).expect("closed group");
            let normalizes = a.aut_s.iter().all(|&c| aut_s.contains(&a.group.mul(a.group.mul(xi, c), x)));
            if normalizes && !restricted.contains(&x) {
                failures.push(format!("listed subgroup {k}: automorphism {x} normalizing Aut_S does not extend to S"));
                break;
            }
        }
    }
    Ok(SpotCheck { pass: failures.is_empty(), failures })
}

/// Removes a pearl class from a generated system and reruns the spot-check.
pub fn prune_pearl_class(g: &Generated, p: &ElemSet) -> Result<(Generated, SpotCheck)> {
    let t = g.sylow().table();
    let f = FusionSystem::Generated(g.clone());
    let listed = g
        .listed()
        .iter()
        .find(|l| (0..t.size() as u32).any(|s| t.conjugate_set(&l.set, s) == *p))
        .ok_or(FusionError::NotListed)?;
    if pearl_shape(t, &listed.set, g.sylow().prime()).is_none() || essential_report(&f, &listed.set)?.is_none() {
        return Err(FusionError::NotPearl);
    }
    let pruned = g.without_class(p)?;
    let check = saturation_spot_check(&pruned)?;
    Ok((pruned, check))
}
