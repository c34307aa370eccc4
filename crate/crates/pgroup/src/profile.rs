use mcf_groupkernel::{ElemSet, TableGroup};
use serde::Serialize;

use crate::error::{PGroupError, Result};
use crate::pgroup::{PGroup, SubgroupSummary};
use crate::series;

/// Central series and the two distinguished maximal subgroups of a p-group.
#[derive(Clone, Debug)]
pub struct Structure {
    pub p: u64,
    pub n: u32,
    /// `lcs[0] = S`, `lcs[j-1] = γ_j(S)`, last term trivial.
    pub lcs: Vec<ElemSet>,
    /// `ucs[j] = Z_j(S)`, last term `S`.
    pub ucs: Vec<ElemSet>,
    pub class: u32,
    pub maximal_class: bool,
    /// `C_S(γ₂/γ₄)`; present when `S` has maximal class and `n ≥ 4`.
    pub gamma1: Option<ElemSet>,
    /// `C_S(Z₂(S))`; present when `S` has maximal class and `n ≥ 4`.
    pub cz2: Option<ElemSet>,
}

impl Structure {
    pub fn new(g: &PGroup) -> Self {
        let t = g.table();
        let all = g.full();
        let lcs = series::lower_central(t, &all);
        let ucs = series::upper_central(t, &all);
        let class = lcs.len() as u32 - 1;
        let n = g.n();
        let maximal_class = n >= 3 && class == n - 1;
        let (gamma1, cz2) = if maximal_class && n >= 4 {
            (Some(t.centralizer_mod(&all, &lcs[1], &lcs[3])), Some(t.centralizer(&ucs[2])))
        } else {
            (None, None)
        };
        Structure { p: g.prime(), n, lcs, ucs, class, maximal_class, gamma1, cz2 }
    }

    /// `γ_j(S)` with the maximal-class convention `γ₁ = C_S(γ₂/γ₄)`.
    pub fn gamma(&self, j: u32) -> ElemSet {
        if j == 1 {
            return self.gamma1.clone().expect("gamma1 requires maximal class with n >= 4");
        }
        let idx = (j - 1) as usize;
        self.lcs.get(idx).cloned().unwrap_or_else(|| self.lcs.last().expect("nonempty").clone())
    }

    pub fn z(&self, j: usize) -> ElemSet {
        self.ucs.get(j).cloned().unwrap_or_else(|| self.ucs.last().expect("nonempty").clone())
    }

    fn require_mc(&self) -> Result<(&ElemSet, &ElemSet)> {
        match (&self.gamma1, &self.cz2) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(PGroupError::NotMaximalClass),
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!((&self.gamma1, &self.cz2), (Some(a), Some(b)) if a != b)
    }

    /// `t ∉ γ₁(S) ∪ C_S(Z₂(S))`.
    pub fn outside_both(&self, x: u32) -> bool {
        match (&self.gamma1, &self.cz2) {
            (Some(a), Some(b)) => !a.contains(x as usize) && !b.contains(x as usize),
            _ => false,
        }
    }

    /// `C_S(γ_j/γ_{j+2})` for `2 ≤ j ≤ n−2`.
    pub fn two_step_centralizers(&self, t: &TableGroup) -> Result<Vec<ElemSet>> {
        self.require_mc()?;
        let all = &self.lcs[0];
        Ok((2..=self.n - 2)
            .map(|j| t.centralizer_mod(all, &self.gamma(j), &self.gamma(j + 2)))
            .collect())
    }

    /// Largest `c` with `[γ_i, γ_j] ≤ γ_{i+j+c}` for all `i, j ≥ 1`; returns
    /// `(n, true)` when every such bracket is trivial.
    pub fn degree_of_commutativity(&self, t: &TableGroup) -> Result<(i64, bool)> {
        self.require_mc()?;
        let n = self.n;
        let mut best: Option<i64> = None;
        for i in 1..n {
            for j in i..n {
                let br = t.commutator(&self.gamma(i), &self.gamma(j));
                if TableGroup::order_of(&br) == 1 {
                    continue;
                }
                let k = (1..n).rev().find(|&k| br.is_subset(&self.gamma(k))).expect("γ_1 ⊇ bracket");
                let c = k as i64 - i as i64 - j as i64;
                best = Some(best.map_or(c, |b: i64| b.min(c)));
            }
        }
        Ok(match best {
            Some(c) => (c, false),
            None => (n as i64, true),
        })
    }
}

/// Extraspecial: `Z(H) = H′ = Φ(H)` of order `p`.
pub fn is_extraspecial(t: &TableGroup, h: &ElemSet, p: u64) -> bool {
    let z = t.center_of(h);
    TableGroup::order_of(&z) == p as usize && t.derived(h) == z && t.frattini_pgroup(h, p) == z
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MaxClassProfile {
    pub p: u64,
    pub n: u32,
    pub class: u32,
    pub is_maximal_class: bool,
    /// `γ₁` (when `n ≥ 4`), then `γ₂, γ₃, …, 1`.
    pub gamma_series: Vec<SubgroupSummary>,
    /// `Z₁, Z₂, …, S`.
    pub z_series: Vec<SubgroupSummary>,
    pub gamma1: Option<SubgroupSummary>,
    pub cz2: Option<SubgroupSummary>,
    pub is_exceptional: bool,
    pub degree_of_commutativity: Option<i64>,
    pub degree_capped: bool,
    pub omega1_gamma1: Option<SubgroupSummary>,
    pub agemo1: SubgroupSummary,
    pub gamma1_abelian: Option<bool>,
    pub gamma1_extraspecial: Option<bool>,
    /// Least `w ≥ 1` with `γ_w(S)` abelian.
    pub abelian_gamma_index: Option<u32>,
}

pub fn maxclass_profile(g: &PGroup) -> Result<MaxClassProfile> {
    let t = g.table();
    let st = Structure::new(g);
    let p = g.prime();
    let mut gamma_series = Vec::new();
    if st.gamma1.is_some() {
        gamma_series.push(g.summary(&st.gamma(1)));
    }
    gamma_series.extend(st.lcs[1..].iter().map(|s| g.summary(s)));
    let z_series = st.ucs[1..].iter().map(|s| g.summary(s)).collect();
    let (doc, capped) = match st.degree_of_commutativity(t) {
        Ok((c, capped)) => (Some(c), capped),
        Err(_) => (None, false),
    };
    let g1 = st.gamma1.as_ref();
    let abelian_gamma_index =
        g1.and_then(|_| (1..=st.n).find(|&j| t.is_abelian(&st.gamma(j))));
    Ok(MaxClassProfile {
        p,
        n: st.n,
        class: st.class,
        is_maximal_class: st.maximal_class,
        gamma_series,
        z_series,
        gamma1: g1.map(|s| g.summary(s)),
        cz2: st.cz2.as_ref().map(|s| g.summary(s)),
        is_exceptional: st.is_exceptional(),
        degree_of_commutativity: doc,
        degree_capped: capped,
        omega1_gamma1: g1.map(|s| g.summary(&t.omega(s, p))),
        agemo1: g.summary(&t.agemo(&g.full(), p)),
        gamma1_abelian: g1.map(|s| t.is_abelian(s)),
        gamma1_extraspecial: g1.map(|s| is_extraspecial(t, s, p)),
        abelian_gamma_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::{construct, Caps};

    fn pg(g: &mcf_groupkernel::PcGroup) -> PGroup {
        PGroup::from_pc(g, &Caps::default()).unwrap().0
    }

    #[test]
    fn d16_profile() {
        let g = pg(&construct::dihedral_pc(4).unwrap());
        let pr = maxclass_profile(&g).unwrap();
        assert!(pr.is_maximal_class);
        assert!(!pr.is_exceptional);
        assert_eq!(pr.gamma1.as_ref().unwrap().order, 8);
        assert_eq!(pr.gamma1_abelian, Some(true));
        assert_eq!((pr.degree_of_commutativity, pr.degree_capped), (Some(4), true));
    }

    #[test]
    fn wreath_profile() {
        let g = pg(&construct::wreath_pc(3).unwrap());
        let st = Structure::new(&g);
        let t = g.table();
        let g1 = st.gamma(1);
        assert_eq!(TableGroup::order_of(&g1), 27);
        assert!(t.is_abelian(&g1));
        assert_eq!(t.agemo(&g1, 3), t.trivial());
        let two = st.two_step_centralizers(t).unwrap();
        assert!(two.iter().all(|m| *m == g1));
        let pr = maxclass_profile(&g).unwrap();
        let orders: Vec<u128> = pr.gamma_series.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![27, 9, 3, 1]);
        assert!(pr.degree_capped);
    }

    #[test]
    fn small_groups_not_maximal_class() {
        let pr = maxclass_profile(&pg(&construct::elementary_abelian_pc(3, 2).unwrap())).unwrap();
        assert!(!pr.is_maximal_class);
        assert_eq!(pr.class, 1);
        let pr = maxclass_profile(&pg(&construct::extraspecial_pc(3).unwrap())).unwrap();
        assert!(pr.is_maximal_class);
        assert!(pr.gamma1.is_none());
    }

    #[test]
    fn d32_two_step_centralizers_cyclic() {
        let g = pg(&construct::dihedral_pc(5).unwrap());
        let st = Structure::new(&g);
        let t = g.table();
        for m in st.two_step_centralizers(t).unwrap() {
            assert_eq!(TableGroup::order_of(&m), 16);
            assert!(m.ones().any(|x| t.elem_order_of(x as u32) == 16));
        }
    }
}
