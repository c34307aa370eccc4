use mcf_groupkernel::{prime_divisors, Caps, ElemSet, FiniteGroup, PcGroup, Perm, TableGroup};
use serde::Serialize;

use crate::error::{PGroupError, Result};

/// A p-group together with printable labels for its table elements.
#[derive(Clone, Debug)]
pub struct PGroup {
    p: u64,
    n: u32,
    table: TableGroup,
    labels: Vec<String>,
}

/// Order and generators of a subgroup, as emitted in reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SubgroupSummary {
    pub order: u128,
    pub generators: Vec<String>,
}

/// Exponent-vector label such as `g1^2*g3`; the identity is `1`.
pub fn pc_label(v: &[u8]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| if e == 1 { format!("g{}", i + 1) } else { format!("g{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn perm_label(p: &Perm) -> String {
    p.to_string()
}

impl PGroup {
    pub fn from_table(table: TableGroup, labels: Vec<String>) -> Result<Self> {
        let ord = table.size() as u128;
        let primes = prime_divisors(ord);
        let p = match primes.as_slice() {
            [] => 2,
            [p] => *p,
            _ => return Err(PGroupError::NotPGroup(ord)),
        };
        let n = mcf_groupkernel::p_valuation(ord, p);
        Ok(PGroup { p, n, table, labels })
    }

    /// Tabulates a group of prime-power order; the returned elements are
    /// indexed like the table.
    pub fn from_group<G: FiniteGroup>(
        g: &G,
        caps: &Caps,
        label: impl Fn(&G::Elem) -> String,
    ) -> Result<(Self, Vec<G::Elem>)> {
        if prime_divisors(g.order()).len() > 1 {
            return Err(PGroupError::NotPGroup(g.order()));
        }
        let (t, els) = TableGroup::from_group(g, caps.table)?;
        let labels = els.iter().map(label).collect();
        Ok((Self::from_table(t, labels)?, els))
    }

    pub fn from_pc(g: &PcGroup, caps: &Caps) -> Result<(Self, Vec<Vec<u8>>)> {
        Self::from_group(g, caps, |v| pc_label(v))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `|S| = p^n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &TableGroup {
        &self.table
    }

    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    pub fn full(&self) -> ElemSet {
        self.table.full_set()
    }

    pub fn summary(&self, set: &ElemSet) -> SubgroupSummary {
        SubgroupSummary {
            order: TableGroup::order_of(set) as u128,
            generators: self.table.generating_set(set).iter().map(|&x| self.labels[x as usize].clone()).collect(),
        }
    }

    /// Exponent `k` with `|H| = p^k`.
    pub fn log_order(&self, set: &ElemSet) -> u32 {
        mcf_groupkernel::p_valuation(TableGroup::order_of(set) as u128, self.p)
    }

    /// A minimal generating set: greedy choices independent modulo `Φ(H)`.
    pub fn minimal_generators(&self, h: &ElemSet) -> Vec<u32> {
        let t = &self.table;
        let phi = t.frattini_pgroup(h, self.p);
        let mut cur = phi.clone();
        let mut gens = Vec::new();
        for x in h.ones() {
            if TableGroup::order_of(&cur) == TableGroup::order_of(h) {
                break;
            }
            if !cur.contains(x) {
                gens.push(x as u32);
                cur = t.extend(&phi, &gens);
            }
        }
        gens
    }

    pub fn rank(&self, h: &ElemSet) -> u32 {
        let phi = self.table.frattini_pgroup(h, self.p);
        self.log_order(h) - self.log_order(&phi)
    }
}
