//! Power structure: Ω₁, ℧¹, regularity and the 2-Engel set.

use std::collections::HashMap;

use mcf_groupkernel::{Caps, ElemSet, GroupError, TableGroup};

use crate::error::{PGroupError, Result};
use crate::series;

pub fn omega1(t: &TableGroup, h: &ElemSet, p: u64) -> ElemSet {
    t.omega(h, p)
}

pub fn agemo1(t: &TableGroup, h: &ElemSet, p: u64) -> ElemSet {
    t.agemo(h, p)
}

/// Exponent of `H`.
pub fn exponent(t: &TableGroup, h: &ElemSet) -> u64 {
    h.ones().map(|x| t.elem_order_of(x as u32) as u64).max().unwrap_or(1)
}

/// Decides regularity pair by pair: `y^{-p} x^{-p} (xy)^p` must lie in
/// `℧¹(⟨x,y⟩′)`.
pub fn is_regular(t: &TableGroup, h: &ElemSet, p: u64, caps: &Caps) -> Result<bool> {
    let size = TableGroup::order_of(h);
    if size > caps.regular_pairs {
        return Err(GroupError::cap("regularity pair scan", size as u128, caps.regular_pairs as u128).into());
    }
    let els = t.elements_of(h);
    let mut pw: HashMap<u32, u32> = HashMap::with_capacity(els.len());
    for &x in &els {
        pw.insert(x, t.power(x, p));
    }
    let mut cache: HashMap<ElemSet, ElemSet> = HashMap::new();
    for &x in &els {
        for &y in &els {
            let xy = t.mul(x, y);
            let defect = t.mul(t.mul(t.inverse(pw[&y]), t.inverse(pw[&x])), t.power(xy, p));
            if defect == 0 {
                continue;
            }
            let sub = t.closure(&[x, y]);
            let target = cache.entry(sub).or_insert_with_key(|sub| {
                let d = t.derived(sub);
                t.agemo(&d, p)
            });
            if !target.contains(defect as usize) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `E₂(H) = {x ∈ H : [x,y,y] = 1 for all y ∈ H}`, checked to be a subgroup
/// containing `Z₂(H)`.
pub fn e2_subgroup(t: &TableGroup, h: &ElemSet) -> Result<ElemSet> {
    let els = t.elements_of(h);
    let mut out = t.empty_set();
    for &x in &els {
        if els.iter().all(|&y| t.comm(t.comm(x, y), y) == 0) {
            out.insert(x as usize);
        }
    }
    let z = series::upper_central(t, h);
    let z2 = z.get(2).unwrap_or_else(|| z.last().expect("nonempty"));
    if !t.is_subgroup(&out) || !z2.is_subset(&out) {
        return Err(PGroupError::EngelSet);
    }
    Ok(out)
}
