//! Structural checks that every maximal-class p-group must pass.

use mcf_groupkernel::{Caps, ElemSet, TableGroup};
use serde::Serialize;

use crate::error::Result;
use crate::lattice;
use crate::pgroup::PGroup;
use crate::power;
use crate::profile::{is_extraspecial, Structure};
use crate::series;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn skipped(name: &str, why: &str) -> Self {
        Check { name: name.into(), pass: true, detail: format!("not applicable: {why}") }
    }
}

/// Maximal class in the wide sense: order at most `p²`, or class `n−1`.
pub fn has_maximal_class(t: &TableGroup, h: &ElemSet, p: u64) -> bool {
    let k = mcf_groupkernel::p_valuation(TableGroup::order_of(h) as u128, p);
    k <= 2 || series::class(t, h) == k - 1
}

/// Limit on the number of normal-subgroup enumerations in the battery.
fn normal_enum_allowed(p: u64, n: u32) -> bool {
    match p {
        2 => n <= 7,
        3 => n <= 5,
        _ => n <= 4 || (p as u128).pow(n) <= 3125,
    }
}

/// Runs every check on a maximal-class group of order at least `p⁴`.
pub fn maximal_class_battery(g: &PGroup, caps: &Caps) -> Result<Vec<Check>> {
    let t = g.table();
    let st = Structure::new(g);
    let p = g.prime();
    let n = g.n();
    let mut out = Vec::new();
    if !st.maximal_class || n < 4 {
        out.push(Check::new("maximal_class", false, format!("class {} with n = {n}", st.class)));
        return Ok(out);
    }
    let pn = |k: u32| (p as usize).pow(k);
    let all = g.full();
    let g1 = st.gamma(1);
    let cz2 = st.cz2.clone().expect("maximal class");

    let series_ok = (2..n).all(|j| TableGroup::order_of(&st.gamma(j)) == pn(n - j))
        && (1..=(n - 2) as usize).all(|j| st.z(j) == st.gamma(n - j as u32))
        && TableGroup::order_of(&g1) == pn(n - 1);
    out.push(Check::new("series_orders", series_ok, "|γ_j| = p^{n-j}, Z_j = γ_{n-j}, |S:γ₁| = p"));

    if normal_enum_allowed(p, n) {
        let normals = lattice::normal_subgroups(t, caps.max_subgroup_enum)?;
        let bad = normals
            .iter()
            .filter(|nn| **nn != all)
            .filter(|nn| {
                let is_gamma = (2..=n).any(|j| **nn == st.gamma(j));
                !is_gamma && TableGroup::order_of(nn) != pn(n - 1)
            })
            .count();
        out.push(Check::new("normal_subgroups", bad == 0, format!("{} normal subgroups, {bad} off-series", normals.len())));
    } else {
        out.push(Check::skipped("normal_subgroups", "above enumeration bound"));
    }

    match power::is_regular(t, &g1, p, caps) {
        Ok(r) => out.push(Check::new("gamma1_regular", r, "γ₁(S) is regular")),
        Err(e) if e.is_cap() => out.push(Check::skipped("gamma1_regular", "above pair cap")),
        Err(e) => return Err(e),
    }

    let om = t.omega(&g1, p);
    let om_order = TableGroup::order_of(&om);
    let bound_ok = om_order <= pn(p as u32) && (om_order < pn(p as u32) || (om == g1 && n == p as u32 + 1));
    out.push(Check::new("omega1_gamma1_bound", bound_ok, format!("|Ω₁(γ₁)| = {om_order}")));
    if n > p as u32 + 1 {
        let lhs = om == st.gamma(n - (p as u32 - 1));
        let exp_ok = power::exponent(t, &om) == p && om_order == pn(p as u32 - 1);
        let agemo_ok = (1..=n - (p as u32 - 1)).all(|i| t.agemo(&st.gamma(i), p) == st.gamma(i + p as u32 - 1));
        out.push(Check::new("omega1_gamma1_large_n", lhs && exp_ok && agemo_ok, "Ω₁(γ₁) = γ_{n-p+1}, ℧¹(γ_i) = γ_{i+p-1}"));
    } else {
        let g2 = st.gamma(2);
        let sz = t.center_of(&all);
        let quotient_exp_p = all.ones().all(|x| sz.contains(t.power(x as u32, p) as usize));
        let ok = power::exponent(t, &g2) <= p && quotient_exp_p;
        out.push(Check::new("small_n_exponent", ok, "γ₂(S) and S/Z(S) have exponent p"));
    }

    let two = st.two_step_centralizers(t)?;
    let mut distinct: Vec<&ElemSet> = Vec::new();
    for m in &two {
        if !distinct.contains(&m) {
            distinct.push(m);
        }
    }
    let two_ok = distinct.len() <= 2
        && distinct.iter().all(|m| **m == g1 || **m == cz2)
        && two.iter().all(|m| TableGroup::order_of(m) == pn(n - 1))
        && (2..=n.saturating_sub(3)).all(|j| two[(j - 2) as usize] == g1);
    out.push(Check::new("two_step_centralizers", two_ok, format!("{} distinct", distinct.len())));

    let exc = st.is_exceptional();
    let exc_ok = !exc || (p >= 5 && n >= 6 && n <= p as u32 + 1 && n % 2 == 0);
    out.push(Check::new("exceptional_range", exc_ok, format!("exceptional = {exc}")));

    let (c, capped) = st.degree_of_commutativity(t)?;
    out.push(Check::new(
        "degree_of_commutativity",
        (c > 0) == !exc,
        format!("c = {c}{}", if capped { " (capped)" } else { "" }),
    ));

    let outside: Vec<u32> = all.ones().map(|x| x as u32).filter(|&x| st.outside_both(x)).collect();
    let z = st.z(1);
    let p2_ok = outside.iter().all(|&x| {
        let c = t.centralizer(&t.closure(&[x]));
        TableGroup::order_of(&c) == pn(2) && c == t.extend(&z, &[x])
    });
    out.push(Check::new("p2_centralizer", p2_ok, format!("{} elements outside γ₁ ∪ C_S(Z₂)", outside.len())));

    // Sampled subgroups ⟨t, γ_j⟩ and ⟨t, u⟩ for the least outside element t.
    if let Some(&x) = outside.first() {
        let mut samples: Vec<ElemSet> = (2..=n).map(|j| t.extend(&st.gamma(j), &[x])).collect();
        samples.extend(all.ones().take(64).map(|u| t.closure(&[x, u as u32])));
        let ok = samples.iter().all(|h| has_maximal_class(t, h, p));
        out.push(Check::new("subgroups_maximal_class", ok, format!("{} sampled", samples.len())));
    }

    let g3 = st.gamma(3);
    if t.is_abelian(&g3) && (n as u64) < 2 * p + 4 {
        let g2 = st.gamma(2);
        out.push(Check::new("gamma2_class", series::class(t, &g2) <= 2, "γ₃ abelian forces class(γ₂) ≤ 2"));
    }

    if p % 2 == 1 {
        let k = (p as u32 + 1) / 2;
        let br = series::iterated_commutator(t, &om, &g1, k);
        let first = TableGroup::order_of(&br) == 1;
        let br2 = series::iterated_commutator(t, &om, &g1, k - 1);
        let second = TableGroup::order_of(&br2) == 1 || exc;
        out.push(Check::new("omega1_gamma1_commutators", first && second, "[Ω₁(γ₁), γ₁; (p+1)/2] = 1"));
    }

    if let Ok(true) = power::is_regular(t, &g1, p, caps) {
        let lhs = TableGroup::order_of(&g1) / om_order;
        let rhs = TableGroup::order_of(&t.agemo(&g1, p));
        out.push(Check::new("regular_power_index", lhs == rhs, format!("|γ₁/Ω₁| = {lhs}, |℧¹| = {rhs}")));
    }

    if p != 3 {
        for (name, h) in [("S", all.clone()), ("gamma1", g1.clone())] {
            let e2 = power::e2_subgroup(t, &h)?;
            let ok = e2 != h || series::class(t, &h) <= 2;
            out.push(Check::new(&format!("engel_{name}"), ok, "E₂(P) = P forces class ≤ 2"));
        }
    }

    out.push(Check::new(
        "gamma1_shape",
        true,
        format!("abelian = {}, extraspecial = {}", t.is_abelian(&g1), is_extraspecial(t, &g1, p)),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::construct;

    #[test]
    fn corpus_groups_pass() {
        let caps = Caps::default();
        for g in [
            construct::dihedral_pc(4).unwrap(),
            construct::semidihedral_pc(4).unwrap(),
            construct::quaternion_pc(5).unwrap(),
            construct::wreath_pc(3).unwrap(),
            construct::jordan_pc(5, 3).unwrap(),
        ] {
            let (pg, _) = PGroup::from_pc(&g, &caps).unwrap();
            let checks = maximal_class_battery(&pg, &caps).unwrap();
            for c in &checks {
                assert!(c.pass, "{} failed: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn non_maximal_class_flagged() {
        let caps = Caps::default();
        let (pg, _) = PGroup::from_pc(&construct::elementary_abelian_pc(2, 4).unwrap(), &caps).unwrap();
        let checks = maximal_class_battery(&pg, &caps).unwrap();
        assert!(!checks[0].pass);
    }
}
