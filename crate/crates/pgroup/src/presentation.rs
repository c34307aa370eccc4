//! Power-commutator presentations read off a multiplication table.

use std::collections::BTreeMap;

use mcf_groupkernel::io::PcFile;
use mcf_groupkernel::{ElemSet, FiniteGroup, PcGroup, TableGroup};

use crate::error::{PGroupError, Result};
use crate::pgroup::PGroup;

/// `[H, S] H^p`.
fn next_exponent_p_term(t: &TableGroup, h: &ElemSet, all: &ElemSet, p: u64) -> ElemSet {
    let c = t.commutator(h, all);
    t.join(&c, &t.agemo(h, p))
}

/// A polycyclic generating sequence refining the lower exponent-`p` central
/// series; each `⟨g_i, …, g_n⟩` is normal of index `p` in its predecessor.
pub fn pcgs(g: &PGroup) -> Vec<u32> {
    let t = g.table();
    let p = g.prime();
    let all = g.full();
    let mut series = vec![all.clone()];
    while TableGroup::order_of(series.last().unwrap()) > 1 {
        let next = next_exponent_p_term(t, series.last().unwrap(), &all, p);
        series.push(next);
    }
    let mut gens = Vec::new();
    for w in series.windows(2).rev() {
        let (upper, lower) = (&w[0], &w[1]);
        let mut h = lower.clone();
        while h != *upper {
            let x = upper.ones().find(|&x| !h.contains(x)).expect("proper subgroup") as u32;
            h = t.extend(&h, &[x]);
            gens.push(x);
        }
    }
    gens.reverse();
    gens
}

/// A PC presentation of `g`, together with the table indices of its generators.
///
/// The presentation is checked by building the PC group and confirming that
/// the normal-form map to the table is a bijective homomorphism.
pub fn pc_presentation(g: &PGroup, verify_cap: u128) -> Result<(PcFile, Vec<u32>)> {
    let t = g.table();
    let p = g.prime();
    let gens = pcgs(g);
    let n = gens.len();
    // Normal forms of all elements: g_1^{e_1} ⋯ g_n^{e_n}.
    let mut forms: Vec<(u32, Vec<u8>)> = vec![(0, vec![0u8; n])];
    for i in (0..n).rev() {
        let mut next = Vec::with_capacity(forms.len() * p as usize);
        let mut pw = 0u32;
        for e in 0..p as u8 {
            for (w, v) in &forms {
                let mut v = v.clone();
                v[i] = e;
                next.push((t.mul(pw, *w), v));
            }
            pw = t.mul(pw, gens[i]);
        }
        forms = next;
    }
    let mut vec_of = vec![None; t.size()];
    for (x, v) in &forms {
        vec_of[*x as usize] = Some(v.clone());
    }
    let vec_of: Vec<Vec<u8>> = vec_of
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| PGroupError::Presentation("normal forms do not cover the group".into()))?;
    let mut powers = BTreeMap::new();
    let mut commutators = BTreeMap::new();
    for i in 0..n {
        let v = &vec_of[t.power(gens[i], p) as usize];
        if v.iter().any(|&e| e != 0) {
            powers.insert(format!("{}", i + 1), v.clone());
        }
        for j in i + 1..n {
            let v = &vec_of[t.comm(gens[j], gens[i]) as usize];
            if v.iter().any(|&e| e != 0) {
                commutators.insert(format!("{},{}", j + 1, i + 1), v.clone());
            }
        }
    }
    let file = PcFile { prime: p as u32, ngens: n, powers, commutators, provenance: None };
    let pc: PcGroup = file.build(verify_cap)?;
    let index: BTreeMap<&Vec<u8>, u32> = forms.iter().map(|(x, v)| (v, *x)).collect();
    for (x, v) in &forms {
        for (i, &gi) in gens.iter().enumerate() {
            let prod = pc.mul(v, &pc.gen(i));
            if index.get(&prod) != Some(&t.mul(*x, gi)) {
                return Err(PGroupError::Presentation("derived presentation is not isomorphic to the table".into()));
            }
        }
    }
    Ok((file, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::{construct, Caps};

    #[test]
    fn roundtrip_through_presentation() {
        let caps = Caps::default();
        for pc in [
            construct::dihedral_pc(4).unwrap(),
            construct::quaternion_pc(4).unwrap(),
            construct::wreath_pc(3).unwrap(),
            construct::extraspecial_pc(5).unwrap(),
        ] {
            let (g, _) = PGroup::from_pc(&pc, &caps).unwrap();
            let (file, gens) = pc_presentation(&g, caps.pc_verify).unwrap();
            assert_eq!(file.ngens as u32, g.n());
            assert_eq!(gens.len() as u32, g.n());
            let rebuilt = file.build(caps.pc_verify).unwrap();
            assert_eq!(rebuilt.order(), pc.order());
        }
    }
}
