//! Dispatch of fusion-system invariants to the classification theorems.
//!
//! A [`FusionSummary`] is either computed from a fusion system or supplied by
//! hand. [`theorem_case`] selects exactly one case path and evaluates every
//! assertion of that case that the summary can decide. Assertions that the
//! summary cannot decide, such as exoticity or simplicity, are reported as
//! unverifiable with a reason. They are never adjudicated.

use mcf_fusion::{ClassTag, EssentialReport, FocalData, FusionSystem};
use mcf_groupkernel::{p_log, ElemSet, TableGroup};
use mcf_pgroup::power::{agemo1, exponent, omega1};
use mcf_pgroup::profile::is_extraspecial;
use mcf_pgroup::Structure;
use serde::{Deserialize, Serialize};

use crate::error::{ClassifyError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gamma1Kind {
    Abelian,
    Extraspecial,
    Other,
}

/// Position of `O_p(F)` in `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OpKind {
    Trivial,
    Center,
    /// `1 < O_p(F) ≤ γ₂(S)` and `O_p(F) ≠ Z(S)`.
    InsideGamma2,
    CZ2,
    Other,
}

/// Structure of `γ₁(S)`; logarithms are to base `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma1Facts {
    pub log_order: u32,
    pub center_log: u32,
    pub center_is_agemo: bool,
    pub derived_log: u32,
    pub omega1_log: u32,
    /// `γ₁(S)' < Ω₁(γ₁(S))`.
    pub derived_below_omega1: bool,
    pub elementary: bool,
    pub homocyclic: bool,
    pub gamma2_abelian: bool,
    pub gamma2_elementary: bool,
    /// Irreducibility of `Ω₁(γ₁(S))` under `Aut_F(γ₁(S))`.
    #[serde(default)]
    pub omega1_irreducible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionSummary {
    pub p: u64,
    /// `|S| = p^n`.
    pub n: u32,
    pub exceptional: bool,
    pub gamma1: Gamma1Kind,
    /// One tag per `F`-class of essential subgroups.
    pub essentials: Vec<ClassTag>,
    pub op: OpKind,
    /// `k` with `|S : hyp(F)| = p^k`.
    #[serde(default)]
    pub hyp_index_log: Option<u32>,
    #[serde(default)]
    pub out_s_order: Option<u64>,
    #[serde(default)]
    pub out_s_cyclic: Option<bool>,
    #[serde(default)]
    pub out_gamma1_order: Option<u64>,
    #[serde(default)]
    pub out_cz2_order: Option<u64>,
    #[serde(default)]
    pub gamma1_facts: Option<Gamma1Facts>,
    /// Caller-supplied identification of `S` or `F`, e.g. `"G2(p)"`,
    /// `"SmallGroup(5^6,661)"`, `"Ly"`, `"Mo"`.
    #[serde(default)]
    pub identified: Option<String>,
    #[serde(default)]
    pub reduced: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    A,
    B,
    C,
    /// The classification for abelian `γ₁(S)` and odd `p`.
    Abelian,
    /// Maximal class 2-groups.
    Two,
    /// `F = N_F(S)` or `F = N_F(γ₁(S))`, outside every case list.
    Normalizer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason")]
pub enum CheckStatus {
    Verified,
    Failed,
    Unverifiable(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub assertion: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCaseReport {
    pub theorem: TheoremId,
    pub case_path: String,
    pub checks: Vec<CheckResult>,
}

impl TheoremCaseReport {
    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed)
    }

    pub fn all_decided_hold(&self) -> bool {
        self.failed().next().is_none()
    }

    /// The theorem of the appendix, with the overview statement for the
    /// reduced cases of non-abelian `γ₁`.
    pub fn headline(&self) -> String {
        let t = match self.theorem {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::C => "C",
            TheoremId::Abelian => "abelian",
            TheoremId::Two => "p = 2",
            TheoremId::Normalizer => "normalizer",
        };
        format!("{t}: {}", self.case_path)
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn decide(&mut self, assertion: &str, holds: bool, detail: impl Into<String>) -> bool {
        let status = if holds { CheckStatus::Verified } else { CheckStatus::Failed };
        self.0.push(CheckResult { assertion: assertion.into(), status, detail: detail.into() });
        holds
    }

    fn maybe(&mut self, assertion: &str, value: Option<bool>, missing: &str, detail: impl Into<String>) {
        match value {
            Some(v) => {
                self.decide(assertion, v, detail);
            }
            None => self.open(assertion, missing),
        }
    }

    fn open(&mut self, assertion: &str, reason: &str) {
        self.0.push(CheckResult {
            assertion: assertion.into(),
            status: CheckStatus::Unverifiable(reason.into()),
            detail: String::new(),
        });
    }
}

const EXOTIC: &str = "exoticity and simplicity rest on the classification of finite simple groups";

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |a, k| a.checked_mul(k))
}

impl FusionSummary {
    fn count(&self, tag: ClassTag) -> usize {
        self.essentials.iter().filter(|&&t| t == tag).count()
    }

    fn only(&self, allowed: &[ClassTag]) -> bool {
        self.essentials.iter().all(|t| allowed.contains(t))
    }

    /// Rejects summaries that no maximal class group of the stated order can have.
    pub fn validate(&self) -> Result<()> {
        let p = self.p;
        if !mcf_groupkernel::is_prime(p) {
            return Err(ClassifyError::Inconsistent(format!("{p} is not prime")));
        }
        if self.n < 3 {
            return Err(ClassifyError::Inconsistent(format!("maximal class requires |S| ≥ p^3, got p^{}", self.n)));
        }
        if self.exceptional && (p < 5 || self.n < 6 || self.n % 2 == 1 || self.n as u64 > p + 1) {
            return Err(ClassifyError::Inconsistent(format!(
                "an exceptional maximal class {p}-group has even order exponent between 6 and p + 1, got p = {p}, n = {}",
                self.n
            )));
        }
        if self.gamma1 != Gamma1Kind::Abelian && self.n < 4 {
            return Err(ClassifyError::Inconsistent("γ₁(S) is abelian when |S| = p^3".into()));
        }
        if self.essentials.contains(&ClassTag::CZ2) && !self.exceptional {
            return Err(ClassifyError::Inconsistent("C_S(Z₂(S)) = γ₁(S) when S is not exceptional".into()));
        }
        if self.essentials.contains(&ClassTag::QuaternionPearl) && p != 2 {
            return Err(ClassifyError::Inconsistent("quaternion pearls only occur for p = 2".into()));
        }
        if self.count(ClassTag::Gamma1) > 1 || self.count(ClassTag::CZ2) > 1 {
            return Err(ClassifyError::Inconsistent("γ₁(S) and C_S(Z₂(S)) are characteristic".into()));
        }
        if let Some(k) = self.hyp_index_log {
            if k > self.n {
                return Err(ClassifyError::Inconsistent("|S : hyp(F)| exceeds |S|".into()));
            }
        }
        Ok(())
    }

    /// `O^p(F) ≠ F` exactly when `hyp(F) < S`.
    fn hyp_rule(&self, c: &mut Checks, offset: u32) {
        let p = self.p;
        let m = self.n.checked_sub(offset);
        let divisible = m.map_or(false, |m| m >= (p - 1) as u32 && m as u64 % (p - 1) == 0);
        match self.hyp_index_log {
            Some(k) => {
                c.decide("|S : hyp(F)| ≤ p", k <= 1, format!("|S : hyp(F)| = {p}^{k}"));
                let form = format!("|S| = p^(j(p-1)+{offset}) for some j ≥ 1");
                c.decide(
                    &format!("|S : hyp(F)| = p iff {form}"),
                    (k == 1) == divisible,
                    format!("n = {}, form {}, |S : hyp(F)| = {p}^{k}", self.n, if divisible { "holds" } else { "fails" }),
                );
            }
            None => c.open("|S : hyp(F)| = p iff the order condition holds", "hyperfocal subgroup not supplied"),
        }
    }

    fn op_trivial(&self, c: &mut Checks) {
        c.decide("O_p(F) = 1", self.op == OpKind::Trivial, format!("O_p(F): {:?}", self.op));
    }
}

/// The unique case path of the classification that applies to `s`.
pub fn theorem_case(s: &FusionSummary) -> Result<TheoremCaseReport> {
    s.validate()?;
    let mut c = Checks(Vec::new());
    let (theorem, path) = dispatch(s, &mut c);
    Ok(TheoremCaseReport { theorem, case_path: path, checks: c.0 })
}

fn dispatch(s: &FusionSummary, c: &mut Checks) -> (TheoremId, String) {
    let p = s.p;
    if p == 2 {
        c.decide(
            "every F-essential subgroup is an F-pearl",
            s.essentials.iter().all(|t| t.is_pearl()),
            format!("essential tags {:?}", s.essentials),
        );
        return (TheoremId::Two, "dihedral, semidihedral or quaternion".into());
    }
    if s.essentials.is_empty() {
        c.decide("F = N_F(S)", true, "no essential subgroups");
        return (TheoremId::Normalizer, "N_F(S)".into());
    }
    if s.exceptional {
        return exceptional(s, c);
    }
    if s.gamma1 == Gamma1Kind::Abelian {
        return abelian(s, c);
    }
    if s.only(&[ClassTag::Gamma1]) {
        c.decide("F = N_F(γ₁(S))", true, "γ₁(S) is the only essential subgroup");
        return (TheoremId::Normalizer, "N_F(γ₁(S))".into());
    }
    non_exceptional(s, c)
}

fn exceptional(s: &FusionSummary, c: &mut Checks) -> (TheoremId, String) {
    let p = s.p;
    let id = s.identified.as_deref();
    if s.gamma1 == Gamma1Kind::Extraspecial {
        if s.only(&[ClassTag::Gamma1]) {
            c.decide("F = N_F(γ₁(S))", true, "γ₁(S) is the only essential subgroup");
            return (TheoremId::B, "B(i)".into());
        }
        let pearls_only = s.only(&[ClassTag::AbelianPearl, ClassTag::Gamma1]) && s.count(ClassTag::AbelianPearl) > 0;
        if p >= 11 && s.n as u64 == p - 1 && pearls_only {
            c.decide("p ≥ 11", true, format!("p = {p}"));
            c.decide("|S| = p^(p-1)", true, format!("n = {}", s.n));
            c.decide("P(F) = P_a(F) is non-empty", true, format!("{} abelian pearl classes", s.count(ClassTag::AbelianPearl)));
            match id {
                Some(x) => {
                    c.decide("S ≅ S(p)", x == "S(p)", format!("identified as {x}"));
                }
                None => c.open("S ≅ S(p)", "isomorphism type of S not supplied"),
            }
            if s.essentials.contains(&ClassTag::Gamma1) {
                let want = (p - 1) * (p - 1);
                c.maybe(
                    "Out_F(S) ≅ GF(p)^× × GF(p)^×",
                    s.out_s_order.map(|o| o == want && s.out_s_cyclic != Some(true)),
                    "Out_F(S) not supplied",
                    format!("|Out_F(S)| = {:?}, expected {want}", s.out_s_order),
                );
                c.open("O^{p'}(Out_F(γ₂(S))) ≅ SL_2(p)", "Out_F(γ₂(S)) is not part of the summary");
                c.open("γ₁(S)/Z(γ₁(S)) is the (p-3)-dimensional irreducible SL_2(p)-module", "module structure is not part of the summary");
            }
            s.op_trivial(c);
            return (TheoremId::B, "B(i)(b)".into());
        }
        c.decide("|S| = p^6", s.n == 6, format!("n = {}", s.n));
        match id {
            Some(x) => {
                let g2_sylow = matches!(x, "G2(p)" | "Ly" | "HN" | "Aut(HN)" | "B" | "Mo" | "exotic");
                c.decide("S is isomorphic to a Sylow p-subgroup of G_2(p)", g2_sylow, format!("identified as {x}"));
            }
            None => c.open("S is isomorphic to a Sylow p-subgroup of G_2(p)", "isomorphism type of S not supplied"),
        }
        if s.only(&[ClassTag::CZ2]) {
            c.decide("F = N_F(C_S(Z₂(S)))", true, "C_S(Z₂(S)) is the only essential subgroup");
            let sl2 = p * (p * p - 1);
            c.maybe(
                "O^{p'}(Out_F(C_S(Z₂(S)))) ≅ SL_2(p)",
                s.out_cz2_order.map(|o| o % sl2 == 0 && o % (p * p) != 0),
                "Out_F(C_S(Z₂(S))) not supplied",
                format!("|Out_F(C_S(Z₂(S)))| = {:?}, |SL_2(p)| = {sl2}", s.out_cz2_order),
            );
            return (TheoremId::B, "B(i)(a)(α)".into());
        }
        if p == 5 && matches!(s.op, OpKind::Center | OpKind::InsideGamma2) {
            c.decide("1 ≠ O_p(F) ≤ γ₂(S)", true, format!("O_p(F): {:?}", s.op));
            c.open("F ≅ F_S(5^3·SL_3(5))", "identification of F is not computable from the summary");
            return (TheoremId::B, "B(i)(a)(β)".into());
        }
        s.op_trivial(c);
        c.decide("F = O^p(F)", s.hyp_index_log.map_or(true, |k| k == 0), format!("|S : hyp(F)| = p^{:?}", s.hyp_index_log));
        let sub = match (p, id) {
            (_, Some("G2(p)")) => "(γ)",
            (5, Some("Ly" | "HN" | "Aut(HN)" | "B")) => "(δ)",
            (7, Some("Mo" | "exotic")) => "(ε)",
            (5, _) => "(γ|δ)",
            (7, _) => "(γ|ε)",
            _ => "(γ)",
        };
        if sub.contains('|') {
            c.open("identification of F among the listed systems", "F is not identified in the summary");
        }
        if sub.contains('ε') {
            c.open("F is exotic or F = F_S(M)", EXOTIC);
        }
        return (TheoremId::B, format!("B(i)(a){sub}"));
    }
    if p == 5 && s.n == 6 {
        c.decide("p = 5 and |S| = 5^6", true, "");
        match id {
            Some(x) => {
                c.decide("S = SmallGroup(5^6,661)", x == "SmallGroup(5^6,661)", format!("identified as {x}"));
            }
            None => c.open("S = SmallGroup(5^6,661)", "small group identifiers depend on an external library"),
        }
        c.decide("O_5(F) = C_S(Z₂(S))", s.op == OpKind::CZ2, format!("O_p(F): {:?}", s.op));
        c.decide(
            "C_S(Z₂(S)) is the unique F-essential subgroup",
            s.essentials == [ClassTag::CZ2],
            format!("essential tags {:?}", s.essentials),
        );
        c.maybe(
            "Out_F(S) is cyclic of order 4",
            s.out_s_order.zip(s.out_s_cyclic).map(|(o, cyc)| o == 4 && cyc),
            "Out_F(S) not supplied",
            format!("|Out_F(S)| = {:?}, cyclic {:?}", s.out_s_order, s.out_s_cyclic),
        );
        c.maybe(
            "Out_F(C_S(Z₂(S))) ≅ SL_2(5)",
            s.out_cz2_order.map(|o| o == 120),
            "Out_F(C_S(Z₂(S))) not supplied",
            format!("|Out_F(C_S(Z₂(S)))| = {:?}, |SL_2(5)| = 120", s.out_cz2_order),
        );
        c.open("F is unique", "uniqueness is a statement about all fusion systems on S");
        return (TheoremId::B, "B(ii)".into());
    }
    c.decide(
        "γ₁(S) is extraspecial or (p, |S|) = (5, 5^6)",
        false,
        format!("γ₁(S): {:?}, p = {p}, n = {}", s.gamma1, s.n),
    );
    (TheoremId::B, "B".into())
}

fn non_exceptional(s: &FusionSummary, c: &mut Checks) -> (TheoremId, String) {
    let p = s.p;
    let g1 = s.essentials.contains(&ClassTag::Gamma1);
    let a_count = s.count(ClassTag::AbelianPearl);
    if g1 {
        c.decide("p ≥ 5", p >= 5, format!("p = {p}"));
        c.decide(
            "E_F = P_a(F) ∪ {γ₁(S)}",
            s.only(&[ClassTag::AbelianPearl, ClassTag::Gamma1]) && a_count > 0,
            format!("essential tags {:?}", s.essentials),
        );
        s.op_trivial(c);
        c.maybe("F ≠ O^p(F)", s.hyp_index_log.map(|k| k >= 1), "hyperfocal subgroup not supplied", format!("|S : hyp(F)| = p^{:?}", s.hyp_index_log));
        let j_ok = (s.n as u64 - 1) % (p - 1) == 0 && (s.n as u64 - 1) / (p - 1) >= 2;
        c.decide(
            "(a) P_a(F) is a single F-class and |S| = p^(j(p-1)+1) for some j ≥ 2",
            a_count == 1 && j_ok,
            format!("{a_count} abelian pearl classes, n = {}", s.n),
        );
        let sym = factorial(p);
        let pgl = p * (p * p - 1);
        c.maybe(
            "(b) Out_F(γ₁(S)) ≅ Sym(p) or PGL_2(p)",
            s.out_gamma1_order.map(|o| Some(o) == sym || o == pgl),
            "Out_F(γ₁(S)) not supplied",
            format!("|Out_F(γ₁(S))| = {:?}, |Sym(p)| = {sym:?}, |PGL_2(p)| = {pgl}", s.out_gamma1_order),
        );
        match &s.gamma1_facts {
            Some(f) => {
                let pu = p as u32;
                c.decide(
                    "(c) Z(γ₁(S)) = ℧¹(γ₁(S)) has index p^(p-1) in γ₁(S)",
                    f.center_is_agemo && f.log_order >= f.center_log && f.log_order - f.center_log == pu - 1,
                    format!("|γ₁| = p^{}, |Z(γ₁)| = p^{}, Z = ℧¹: {}", f.log_order, f.center_log, f.center_is_agemo),
                );
                c.decide(
                    "(c) γ₁(S)' < Ω₁(γ₁(S)) has order p^(p-2)",
                    f.derived_below_omega1 && f.derived_log == pu - 2,
                    format!("|γ₁'| = p^{}, |Ω₁(γ₁)| = p^{}", f.derived_log, f.omega1_log),
                );
                c.decide(
                    "(c) γ₂(S) is abelian but not elementary abelian",
                    f.gamma2_abelian && !f.gamma2_elementary,
                    format!("abelian {}, elementary {}", f.gamma2_abelian, f.gamma2_elementary),
                );
            }
            None => c.open("(c) structure of γ₁(S)", "γ₁(S) facts not supplied"),
        }
        c.open("(d) composition factors of Aut_F(γ₁(S)) on γ₁(S) have order p or p^(p-2)", "composition series of the action is not part of the summary");
        c.maybe("(e) hyp(F) = Pγ₂(S)", s.hyp_index_log.map(|k| k == 1), "hyperfocal subgroup not supplied", format!("|S : hyp(F)| = p^{:?}", s.hyp_index_log));
        c.open("(e) Aut_{O^p(F)}(γ₂(S)) ≅ Sym(p) or PGL_2(p)", "O^p(F) is not part of the summary");
        return (TheoremId::C, "C(iii)".into());
    }
    if a_count > 0 && s.only(&[ClassTag::AbelianPearl]) {
        c.decide("E_F = P_a(F)", true, format!("{a_count} abelian pearl classes"));
        s.hyp_rule(c, 1);
        s.op_trivial(c);
        c.open("O^p(F) is simple and exotic", EXOTIC);
        return (TheoremId::C, "C(i)".into());
    }
    if s.only(&[ClassTag::ExtraspecialPearl]) {
        c.decide("p ≥ 5", p >= 5, format!("p = {p}"));
        c.decide("E_F = P_e(F)", true, format!("{} extraspecial pearl classes", s.essentials.len()));
        c.decide("O_p(F) = Z(S)", s.op == OpKind::Center, format!("O_p(F): {:?}", s.op));
        s.hyp_rule(c, 2);
        c.open("O^p(F/Z(S)) is simple and exotic", EXOTIC);
        return (TheoremId::C, "C(ii)".into());
    }
    c.decide(
        "E_F is P_a(F), P_e(F) or P_a(F) ∪ {γ₁(S)}",
        false,
        format!("essential tags {:?}", s.essentials),
    );
    (TheoremId::C, "C".into())
}

fn abelian(s: &FusionSummary, c: &mut Checks) -> (TheoremId, String) {
    let p = s.p;
    let pearls = s.count(ClassTag::AbelianPearl) + s.count(ClassTag::ExtraspecialPearl);
    let shape_ok = s.only(&[ClassTag::AbelianPearl, ClassTag::ExtraspecialPearl, ClassTag::Gamma1]);
    match s.reduced {
        Some(true) => {
            c.decide("E_F ⊆ {γ₁(S)} ∪ P(F)", shape_ok, format!("essential tags {:?}", s.essentials));
            c.decide("P(F) is non-empty", pearls > 0, format!("{pearls} pearl classes"));
        }
        Some(false) => c.open("E_F = {γ₁(S)} ∪ P(F)", "the statement concerns reduced fusion systems"),
        None => c.open("E_F = {γ₁(S)} ∪ P(F)", "reducedness not supplied"),
    }
    if !s.essentials.contains(&ClassTag::Gamma1) {
        return (TheoremId::Abelian, "(i)".into());
    }
    let Some(f) = &s.gamma1_facts else {
        c.open("size of Ω₁(γ₁(S))", "γ₁(S) facts not supplied");
        return (TheoremId::Abelian, "(ii)-(v)".into());
    };
    let pu = p as u32;
    let path = if f.omega1_log < pu - 1 {
        c.decide("γ₁(S) = Ω₁(γ₁(S))", f.elementary, format!("|Ω₁(γ₁)| = p^{}, |γ₁| = p^{}", f.omega1_log, f.log_order));
        "(ii)"
    } else if f.omega1_log == pu {
        c.decide("γ₁(S) = Ω₁(γ₁(S))", f.elementary, format!("|γ₁| = p^{}", f.log_order));
        c.decide("|S| = p^(p+1)", s.n == pu + 1, format!("n = {}", s.n));
        "(iii)"
    } else if f.omega1_log == pu - 1 {
        match f.omega1_irreducible {
            Some(true) => {
                c.decide(
                    "γ₁(S) is homocyclic of order p^(a(p-1))",
                    f.homocyclic && f.log_order % (pu - 1) == 0,
                    format!("|γ₁| = p^{}", f.log_order),
                );
                "(iv)"
            }
            Some(false) => "(v)",
            None => {
                c.open("irreducibility of Ω₁(γ₁(S))", "module structure not supplied");
                "(iv|v)"
            }
        }
    } else {
        c.decide("|Ω₁(γ₁(S))| ≤ p^p", false, format!("|Ω₁(γ₁)| = p^{}", f.omega1_log));
        "(ii)-(v)"
    };
    (TheoremId::Abelian, path.into())
}

/// Groups essential reports, given up to `S`-conjugacy, into `F`-classes.
pub fn f_class_tags(f: &FusionSystem, essentials: &[EssentialReport]) -> Vec<ClassTag> {
    let mut seen: Vec<Vec<ElemSet>> = Vec::new();
    let mut tags = Vec::new();
    for e in essentials {
        if seen.iter().any(|cls| cls.contains(&e.set)) {
            continue;
        }
        seen.push(f.f_class(&e.set));
        tags.push(e.class_tag);
    }
    tags
}

fn is_cyclic(t: &TableGroup) -> bool {
    (0..t.size() as u32).any(|a| t.elem_order_of(a) as usize == t.size())
}

/// Structure of `γ₁(S)` and `γ₂(S)` for the summary.
pub fn gamma1_facts(st: &Structure, t: &TableGroup, g1: &ElemSet) -> Gamma1Facts {
    let p = st.p;
    let log = |h: &ElemSet| p_log(TableGroup::order_of(h) as u128, p).unwrap_or(0);
    let z = t.center_of(g1);
    let om = omega1(t, g1, p);
    let der = t.derived(g1);
    let g2 = st.gamma(2);
    let exp_log = p_log(exponent(t, g1) as u128, p).unwrap_or(0);
    let abelian = t.is_abelian(g1);
    Gamma1Facts {
        log_order: log(g1),
        center_log: log(&z),
        center_is_agemo: agemo1(t, g1, p) == z,
        derived_log: log(&der),
        omega1_log: log(&om),
        derived_below_omega1: der.is_subset(&om) && der != om,
        elementary: abelian && exp_log <= 1,
        homocyclic: abelian && log(&om) * exp_log == log(g1),
        gamma2_abelian: t.is_abelian(&g2),
        gamma2_elementary: t.is_abelian(&g2) && exponent(t, &g2) <= p,
        omega1_irreducible: None,
    }
}

impl FusionSummary {
    /// Summary of a fusion system on a maximal class group from its
    /// essential subgroups and focal data.
    pub fn from_system(f: &FusionSystem, essentials: &[EssentialReport], focal: &FocalData) -> Result<Self> {
        let s = f.sylow();
        let t = s.table();
        let p = f.prime();
        let st = Structure::new(s);
        if !st.maximal_class {
            return Err(ClassifyError::Precondition("S does not have maximal class".into()));
        }
        let g1 = st.gamma1.clone();
        let gamma1 = match &g1 {
            None => Gamma1Kind::Abelian,
            Some(g) if t.is_abelian(g) => Gamma1Kind::Abelian,
            Some(g) if is_extraspecial(t, g, p) => Gamma1Kind::Extraspecial,
            Some(_) => Gamma1Kind::Other,
        };
        let z = st.z(1);
        let g2 = st.gamma(2);
        let op = &focal.op_f;
        let op_kind = if TableGroup::order_of(op) == 1 {
            OpKind::Trivial
        } else if *op == z {
            OpKind::Center
        } else if op.is_subset(&g2) {
            OpKind::InsideGamma2
        } else if st.cz2.as_ref() == Some(op) && st.is_exceptional() {
            OpKind::CZ2
        } else {
            OpKind::Other
        };
        let full = t.full_set();
        let out_s = f.out_f(&full)?;
        let out_of = |h: &Option<ElemSet>| -> Result<Option<u64>> {
            match h {
                Some(h) => Ok(Some(f.out_f(h)?.order() as u64)),
                None => Ok(None),
            }
        };
        Ok(FusionSummary {
            p,
            n: st.n,
            exceptional: st.is_exceptional(),
            gamma1,
            essentials: f_class_tags(f, essentials),
            op: op_kind,
            hyp_index_log: p_log(focal.index_s_hyp, p),
            out_s_order: Some(out_s.order() as u64),
            out_s_cyclic: Some(is_cyclic(out_s.table())),
            out_gamma1_order: out_of(&g1)?,
            out_cz2_order: if st.is_exceptional() { out_of(&st.cz2)? } else { None },
            gamma1_facts: g1.as_ref().map(|g| gamma1_facts(&st, t, g)),
            identified: None,
            reduced: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn base(p: u64, n: u32) -> FusionSummary {
        FusionSummary {
            p,
            n,
            exceptional: false,
            gamma1: Gamma1Kind::Other,
            essentials: vec![],
            op: OpKind::Trivial,
            hyp_index_log: None,
            out_s_order: None,
            out_s_cyclic: None,
            out_gamma1_order: None,
            out_cz2_order: None,
            gamma1_facts: None,
            identified: None,
            reduced: None,
        }
    }

    fn status(r: &TheoremCaseReport, prefix: &str) -> CheckStatus {
        r.checks.iter().find(|c| c.assertion.starts_with(prefix)).expect(prefix).status.clone()
    }

    #[test]
    fn abelian_pearls_at_five_six() {
        let mut s = base(5, 6);
        s.essentials = vec![ClassTag::AbelianPearl; 2];
        s.hyp_index_log = Some(0);
        let r = theorem_case(&s).unwrap();
        assert_eq!(r.case_path, "C(i)");
        assert!(r.all_decided_hold(), "{r:?}");
        assert_eq!(status(&r, "|S : hyp(F)| = p iff"), CheckStatus::Verified);
        s.hyp_index_log = Some(1);
        let r = theorem_case(&s).unwrap();
        assert_eq!(status(&r, "|S : hyp(F)| = p iff"), CheckStatus::Failed);
        // 9 = 2·4 + 1.
        s.n = 9;
        assert!(theorem_case(&s).unwrap().all_decided_hold());
    }

    #[test]
    fn exceptional_five_six() {
        let mut s = base(5, 6);
        s.exceptional = true;
        s.essentials = vec![ClassTag::CZ2];
        s.op = OpKind::CZ2;
        s.out_s_order = Some(4);
        s.out_s_cyclic = Some(true);
        s.out_cz2_order = Some(120);
        let r = theorem_case(&s).unwrap();
        assert_eq!((r.theorem, r.case_path.as_str()), (TheoremId::B, "B(ii)"));
        assert!(r.all_decided_hold());
        assert!(matches!(status(&r, "S = SmallGroup"), CheckStatus::Unverifiable(_)));
    }

    #[test]
    fn exceptional_needs_large_prime() {
        let mut s = base(3, 6);
        s.exceptional = true;
        assert!(matches!(theorem_case(&s), Err(ClassifyError::Inconsistent(_))));
        let mut s = base(7, 7);
        s.exceptional = true;
        assert!(theorem_case(&s).is_err());
    }

    #[test]
    fn gamma1_essential_checklist() {
        let mut s = base(5, 9);
        s.essentials = vec![ClassTag::AbelianPearl, ClassTag::Gamma1];
        s.out_gamma1_order = Some(120);
        s.hyp_index_log = Some(1);
        let r = theorem_case(&s).unwrap();
        assert_eq!(r.case_path, "C(iii)");
        assert_eq!(status(&r, "(b)"), CheckStatus::Verified);
        assert_eq!(status(&r, "(a)"), CheckStatus::Verified);
        s.out_gamma1_order = Some(60);
        assert_eq!(status(&theorem_case(&s).unwrap(), "(b)"), CheckStatus::Failed);
    }

    #[test]
    fn normalizer_paths() {
        let mut s = base(5, 7);
        assert_eq!(theorem_case(&s).unwrap().theorem, TheoremId::Normalizer);
        s.essentials = vec![ClassTag::Gamma1];
        assert_eq!(theorem_case(&s).unwrap().case_path, "N_F(γ₁(S))");
    }

    #[test]
    fn summary_roundtrips_through_json() {
        let mut s = base(7, 8);
        s.essentials = vec![ClassTag::ExtraspecialPearl];
        s.op = OpKind::Center;
        let json = serde_json::to_string(&s).unwrap();
        let back: FusionSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(theorem_case(&back).unwrap().case_path, "C(ii)");
    }
}
