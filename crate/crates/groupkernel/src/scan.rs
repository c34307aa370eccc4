//! Exact subgroup computations by full element scans.

use std::collections::HashSet;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::{p_valuation, FiniteGroup};
use crate::map::GroupMap;
use crate::subgroup::Subgroup;

fn check_cap<G: FiniteGroup>(g: &G, caps: &Caps, what: &str) -> Result<()> {
    if g.order() > caps.max_scan {
        Err(GroupError::cap(what, g.order(), caps.max_scan))
    } else {
        Ok(())
    }
}

fn collect_where<G: FiniteGroup>(g: &G, pred: impl Fn(&G::Elem) -> bool) -> Vec<G::Elem> {
    let mut out = Vec::new();
    g.visit_elements(&mut |x| {
        if pred(x) {
            out.push(x.clone());
        }
        true
    });
    out
}

/// `N_G(H)` by scanning `G`.
pub fn normalizer<G: FiniteGroup>(g: &G, h: &Subgroup<G::Elem>, caps: &Caps) -> Result<Subgroup<G::Elem>> {
    check_cap(g, caps, "normalizer scan")?;
    let els = collect_where(g, |x| h.gens().iter().all(|a| h.contains(&g.conj(a, x))));
    Ok(Subgroup::from_elements(g, els))
}

/// `C_G(H)` by scanning `G`.
pub fn centralizer<G: FiniteGroup>(g: &G, h: &Subgroup<G::Elem>, caps: &Caps) -> Result<Subgroup<G::Elem>> {
    check_cap(g, caps, "centralizer scan")?;
    let els = collect_where(g, |x| h.gens().iter().all(|a| g.mul(a, x) == g.mul(x, a)));
    Ok(Subgroup::from_elements(g, els))
}

/// A Sylow `p`-subgroup, grown one factor of `p` at a time inside successive
/// normalizers.
pub fn sylow_p<G: FiniteGroup>(g: &G, p: u64, caps: &Caps) -> Result<Subgroup<G::Elem>> {
    let k = p_valuation(g.order(), p);
    if k == 0 {
        return Err(GroupError::PrimeDoesNotDivide { p, order: g.order() });
    }
    check_cap(g, caps, "Sylow scan")?;
    let target = (p as u128).pow(k);
    let id = g.identity();
    let mut gens: Vec<G::Elem> = Vec::new();
    let mut members: HashSet<G::Elem> = [id].into_iter().collect();
    while (members.len() as u128) < target {
        let mut found = None;
        g.visit_elements(&mut |x| {
            if members.contains(x) {
                return true;
            }
            if !members.contains(&g.pow(x, p)) {
                return true;
            }
            if gens.iter().all(|a| members.contains(&g.conj(a, x))) {
                found = Some(x.clone());
                return false;
            }
            true
        });
        let x = found.ok_or_else(|| GroupError::Inconsistent("normalizer climb stalled".into()))?;
        gens.push(x);
        let sub = Subgroup::generate(g, gens.clone(), target)?;
        members = sub.elements().iter().cloned().collect();
    }
    let mut els: Vec<G::Elem> = members.into_iter().collect();
    els.sort();
    Ok(Subgroup::from_parts(gens, els))
}

/// Distinct maps `c_g : P → Q` with `P^g ≤ Q`, keyed by generator images.
pub fn transporter_maps<G: FiniteGroup>(
    g: &G,
    p: &Subgroup<G::Elem>,
    q: &Subgroup<G::Elem>,
    caps: &Caps,
) -> Result<Vec<GroupMap<G::Elem, G::Elem>>> {
    check_cap(g, caps, "transporter scan")?;
    let pg = p.gens().to_vec();
    let mut seen: HashSet<Vec<G::Elem>> = HashSet::new();
    let mut keys: Vec<Vec<G::Elem>> = Vec::new();
    let mut full_check = true;
    g.visit_elements(&mut |x| {
        let imgs: Vec<G::Elem> = pg.iter().map(|a| g.conj(a, x)).collect();
        if imgs.iter().all(|b| q.contains(b)) && !seen.contains(&imgs) {
            // Generator images determine c_g on P; the full image must lie in Q.
            if p.elements().iter().any(|a| !q.contains(&g.conj(a, x))) {
                full_check = false;
                return false;
            }
            seen.insert(imgs.clone());
            keys.push(imgs);
        }
        true
    });
    if !full_check {
        return Err(GroupError::Inconsistent("generators of P do not generate P".into()));
    }
    keys.sort();
    keys.into_iter()
        .map(|imgs| GroupMap::from_generators(g, g, pg.clone(), imgs, p.order()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::perm::Perm;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn centralizer_of_three_cycle() {
        let s3 = construct::sym(3).unwrap();
        let h = Subgroup::generate(&s3, vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], 10).unwrap();
        let c = centralizer(&s3, &h, &caps()).unwrap();
        assert!(c.same_elements(&h));
    }

    #[test]
    fn klein_four_normal_in_sym4() {
        let s4 = construct::sym(4).unwrap();
        let v = Subgroup::generate(
            &s4,
            vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(), Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()],
            10,
        )
        .unwrap();
        assert_eq!(normalizer(&s4, &v, &caps()).unwrap().order(), 24);
    }

    #[test]
    fn sylow_orders() {
        let s4 = construct::sym(4).unwrap();
        let p = sylow_p(&s4, 2, &caps()).unwrap();
        assert_eq!(p.order(), 8);
        let orders: Vec<u64> = p.elements().iter().map(|x| s4.elem_order(x)).collect();
        // Dihedral profile: 5 involutions, 2 elements of order 4.
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 5);
        let pgl = construct::pgl2(7).unwrap();
        let s = sylow_p(&pgl, 2, &caps()).unwrap();
        assert_eq!(s.order(), 16);
        assert_eq!(normalizer(&pgl, &s, &caps()).unwrap().order(), 16);
        assert_eq!(sylow_p(&construct::sym(9).unwrap(), 3, &caps()).unwrap().order(), 81);
        assert!(sylow_p(&s4, 5, &caps()).is_err());
    }

    #[test]
    fn scan_cap_is_explicit() {
        let s9 = construct::sym(9).unwrap();
        let h = Subgroup::generate(&s9, vec![], 1).unwrap();
        let small = Caps { max_scan: 1000, ..Caps::default() };
        assert!(normalizer(&s9, &h, &small).unwrap_err().is_cap());
    }

    #[test]
    fn transporters_in_pgl27() {
        let g = construct::pgl2(7).unwrap();
        let s = sylow_p(&g, 2, &caps()).unwrap();
        // A Klein four inside S.
        let inv: Vec<Perm> = s.elements().iter().filter(|x| g.elem_order(x) == 2).cloned().collect();
        let mut counts = Vec::new();
        for a in &inv {
            for b in &inv {
                if a < b && a.mul(b) == b.mul(a) {
                    let v = Subgroup::generate(&g, vec![a.clone(), b.clone()], 10).unwrap();
                    counts.push(transporter_maps(&g, &v, &v, &caps()).unwrap().len());
                }
            }
        }
        counts.sort();
        counts.dedup();
        // Klein fours inside PSL2(7) have automizer Sym(3); the others only a transposition.
        assert_eq!(counts, vec![2, 6]);
    }

    #[test]
    fn non_conjugate_fours_in_d16() {
        let d = construct::dihedral_pc(4).unwrap();
        // ⟨s, r⁴⟩ and ⟨sr, r⁴⟩ lie in different classes.
        let v1 = Subgroup::generate(&d, vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1]], 10).unwrap();
        let v2 = Subgroup::generate(&d, vec![vec![1, 1, 0, 0], vec![0, 0, 0, 1]], 10).unwrap();
        assert!(transporter_maps(&d, &v1, &v2, &caps()).unwrap().is_empty());
        let z = Subgroup::generate(&d, vec![vec![0, 0, 0, 1]], 10).unwrap();
        assert_eq!(transporter_maps(&d, &z, &z, &caps()).unwrap().len(), 1);
    }
}
