//! Focal and hyperfocal subgroups and `O_p(F)`.

use mcf_groupkernel::{p_valuation, ElemSet, TableGroup};
use mcf_pgroup::SubgroupSummary;
use serde::Serialize;

use crate::error::Result;
use crate::essential::EssentialReport;
use crate::system::FusionSystem;

#[derive(Clone, Debug)]
pub struct FocalData {
    pub foc: ElemSet,
    pub hyp: ElemSet,
    /// `|S : hyp(F)|`, a power of `p`.
    pub index_s_hyp: u128,
    pub op_f: ElemSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct FocalSummary {
    pub focal: SubgroupSummary,
    pub hyperfocal: SubgroupSummary,
    pub index_s_hyp: u128,
    #[serde(rename = "Op")]
    pub op: SubgroupSummary,
}

impl FocalData {
    pub fn summary(&self, f: &FusionSystem) -> FocalSummary {
        let s = f.sylow();
        FocalSummary {
            focal: s.summary(&self.foc),
            hyperfocal: s.summary(&self.hyp),
            index_s_hyp: self.index_s_hyp,
            op: s.summary(&self.op_f),
        }
    }
}

/// Focal data from `Aut_F(S)` and `Aut_F(E)` over the given essentials.
/// Commutator sets are closed under `S`-conjugation, which accounts for the
/// `S`-conjugates of each listed essential.
pub fn focal_data(f: &FusionSystem, essentials: &[EssentialReport]) -> Result<FocalData> {
    let t = f.table();
    let p = f.prime();
    let full = t.full_set();
    let mut subjects = vec![full.clone()];
    subjects.extend(essentials.iter().map(|e| e.set.clone()));
    let mut foc_gens = Vec::new();
    let mut hyp_gens = Vec::new();
    let mut autos = Vec::new();
    for q in &subjects {
        let a = f.aut_f(q)?;
        let commutators = |alpha: &mcf_autact::Auto, into: &mut Vec<u32>| {
            for x in q.ones() {
                let x = x as u32;
                into.push(t.mul(t.inverse(x), a.local.apply(alpha, x)));
            }
        };
        for g in a.group.gens() {
            commutators(g, &mut foc_gens);
        }
        for i in a.group.p_prime_elements(p) {
            commutators(a.group.elem(i), &mut hyp_gens);
        }
        autos.push(a);
    }
    let foc = t.normal_closure(&t.set_from(&foc_gens), &full);
    let hyp = t.normal_closure(&t.set_from(&hyp_gens), &full);
    let mut op = full.clone();
    for q in &subjects {
        op.intersect_with(q);
    }
    loop {
        let mut next = op.clone();
        for a in &autos {
            for g in a.group.gens() {
                for x in op.ones() {
                    if !op.contains(a.local.apply(g, x as u32) as usize) {
                        next.set(x, false);
                    }
                }
            }
        }
        if next == op {
            break;
        }
        op = next;
    }
    let index = (TableGroup::order_of(&full) / TableGroup::order_of(&hyp)) as u128;
    debug_assert_eq!(index, (p as u128).pow(p_valuation(index, p)));
    Ok(FocalData { foc, hyp, index_s_hyp: index, op_f: op })
}
