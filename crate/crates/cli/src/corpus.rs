//! The built-in corpus and `mcf corpus run`.
//!
//! Each `p`-group is checked against the maximal-class battery, a
//! presentation round trip and the automorphism action law. Each ambient
//! group is checked against independent re-derivations of its fusion data.

use std::collections::HashMap;

use mcf_fusion::essential::essential_report;
use mcf_fusion::{
    essential_subgroups, focal_data, saturation_oracle, verify_theorem_d, ClassTag, EssentialReport,
    FusionSystem, Mode, Realizable,
};
use mcf_classify::{theorem_case, FusionSummary};
use mcf_groupkernel::io::{parse_group, GroupInput};
use mcf_groupkernel::{ElemSet, Perm, PermGroup, TableGroup};
use mcf_pgroup::battery::maximal_class_battery;
use mcf_pgroup::pgroup::perm_label;
use mcf_pgroup::{maxclass_profile, pc_presentation, PGroup, Structure};
use serde::Serialize;

use crate::analyze::{automorphism_summary, load_pgroup};
use crate::error::{CliError, Result};
use crate::fusion::sylow_auto;
use crate::options::Options;
use crate::report::TOOL_VERSION;

pub struct Entry {
    pub name: &'static str,
    pub text: &'static str,
    /// Runs the `p`-group checks.
    pub pgroup: bool,
    /// Primes at which the fusion checks run.
    pub primes: &'static [u64],
}

macro_rules! entry {
    ($name:literal, $pgroup:expr, $primes:expr) => {
        Entry {
            name: $name,
            text: include_str!(concat!("../../../corpus/", $name, ".json")),
            pgroup: $pgroup,
            primes: $primes,
        }
    };
}

pub const CORPUS: &[Entry] = &[
    entry!("d16", true, &[]),
    entry!("sd16", true, &[]),
    entry!("q16", true, &[]),
    entry!("d32", true, &[]),
    entry!("c3wrc3", true, &[]),
    entry!("mc81_power", true, &[]),
    entry!("mc81_nonabelian_pair", true, &[]),
    entry!("mc81_mixed", true, &[]),
    entry!("extraspecial27", true, &[]),
    entry!("jordan5_3", true, &[]),
    entry!("jordan5_4", true, &[]),
    entry!("monomial_3_7_1", true, &[]),
    entry!("sylow3_sym9", true, &[3]),
    entry!("sym4", false, &[2]),
    entry!("psl2_7", false, &[2]),
    entry!("pgl2_7", false, &[2]),
    entry!("psl2_17", false, &[2]),
    entry!("gl2_3", false, &[2]),
    entry!("sl2_7", false, &[2]),
    entry!("psl3_3", false, &[2, 3]),
    entry!("sym9", false, &[3]),
    entry!("alt9", false, &[3]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunResult {
    /// `name` for the `p`-group checks, `name@p` for the fusion checks.
    pub id: String,
    pub checks: Vec<CorpusCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub tool_version: String,
    pub results: Vec<RunResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub all_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Listing {
    pub name: String,
    pub runs: Vec<String>,
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct CorpusArgs {
    /// Run ids or entry names; `None` selects everything.
    pub only: Option<Vec<String>>,
    /// Appends a non-essential subgroup to every essential list.
    pub inject_fake_essential: bool,
}

fn runs(e: &Entry) -> Vec<String> {
    let mut out = Vec::new();
    if e.pgroup {
        out.push(e.name.to_string());
    }
    out.extend(e.primes.iter().map(|p| format!("{}@{p}", e.name)));
    out
}

pub fn list() -> Vec<Listing> {
    CORPUS
        .iter()
        .map(|e| {
            let v: serde_json::Value = serde_json::from_str(e.text).expect("corpus files are JSON");
            Listing {
                name: e.name.into(),
                runs: runs(e),
                provenance: v.get("provenance").and_then(|p| p.as_str()).map(str::to_owned),
            }
        })
        .collect()
}

/// The run ids selected by `only`, in corpus order.
pub fn select(only: Option<&[String]>) -> Result<Vec<String>> {
    let all: Vec<(String, &str)> = CORPUS.iter().flat_map(|e| runs(e).into_iter().map(move |r| (r, e.name))).collect();
    let Some(only) = only else {
        return Ok(all.into_iter().map(|r| r.0).collect());
    };
    if let Some(bad) = only.iter().find(|o| !all.iter().any(|(r, n)| r == *o || n == o)) {
        return Err(CliError::Usage(format!("no corpus entry or run named {bad:?}")));
    }
    Ok(all.into_iter().filter(|(r, n)| only.iter().any(|o| o == r || o == n)).map(|r| r.0).collect())
}

struct Checks(Vec<CorpusCheck>);

impl Checks {
    fn push(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.0.push(CorpusCheck { name: name.into(), status, detail: detail.into() });
    }

    fn verdict(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.push(name, if pass { Status::Pass } else { Status::Fail }, detail);
    }

    /// Records `f`'s verdict; caps become skipped checks, other errors failures.
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((pass, detail)) => self.verdict(name, pass, detail),
            Err(CliError::Cap(why)) => self.push(name, Status::Skipped, why),
            Err(e) => self.push(name, Status::Fail, e.to_string()),
        }
    }
}

fn pgroup_checks(e: &Entry, opts: &Options) -> Vec<CorpusCheck> {
    let mut c = Checks(Vec::new());
    let g = match load_pgroup(e.text, opts) {
        Ok(g) => g,
        Err(err) => {
            c.run("load", || Err(err));
            return c.0;
        }
    };
    let st = Structure::new(&g);
    c.verdict("maximal_class", st.maximal_class, format!("p = {}, n = {}, class {}", g.prime(), g.n(), st.class));
    if g.prime() == 2 || g.n() < 4 {
        c.push("battery", Status::Skipped, "applies to odd primes and order at least p^4");
    } else {
        c.run("battery", || {
            let checks = maximal_class_battery(&g, &opts.caps)?;
            let failed: Vec<&str> = checks.iter().filter(|k| !k.pass).map(|k| k.name.as_str()).collect();
            Ok((!checks.is_empty() && failed.is_empty(), format!("{} checks, failed: {failed:?}", checks.len())))
        });
    }
    c.run("presentation_roundtrip", || roundtrip(&g, opts));
    c.run("action_law", || {
        let s = automorphism_summary(&g, opts)?;
        let pass = s.action_violations == 0 && s.congruence_violations == 0;
        Ok((
            pass,
            format!(
                "|Aut| = {}, {} action checks with {} violations, {} congruence checks with {} violations",
                s.order, s.action_checked, s.action_violations, s.congruence_checked, s.congruence_violations
            ),
        ))
    });
    c.0
}

fn roundtrip(g: &PGroup, opts: &Options) -> Result<(bool, String)> {
    let caps = &opts.caps;
    let (file, _) = pc_presentation(g, caps.pc_verify)?;
    let (h, _) = PGroup::from_pc(&file.build(caps.pc_verify)?, caps)?;
    let (a, b) = (maxclass_profile(g)?, maxclass_profile(&h)?);
    let same = g.n() == h.n()
        && a.class == b.class
        && a.gamma1_abelian == b.gamma1_abelian
        && a.degree_of_commutativity == b.degree_of_commutativity
        && a.is_exceptional == b.is_exceptional;
    Ok((same, format!("{} generators", file.ngens)))
}

fn fake_essential(f: &FusionSystem) -> EssentialReport {
    let t = f.table();
    let z = t.center_of(&t.full_set());
    EssentialReport {
        subgroup: f.sylow().summary(&z),
        set: z,
        class_tag: ClassTag::Other,
        out_order: 1,
        witness_order: 1,
        index: None,
        s_class_size: 1,
        f_class_size: 1,
    }
}

/// `S ∩ G′`, matching Sylow elements to the system's table through their labels.
fn sylow_meet_derived(g: &PermGroup, f: &FusionSystem, sylow: &[Perm]) -> Result<ElemSet> {
    let s = f.sylow();
    let t = f.table();
    let index: HashMap<&str, usize> = (0..t.size()).map(|i| (s.label(i as u32), i)).collect();
    let d = g.derived_subgroup()?;
    let mut out = t.empty_set();
    for e in sylow {
        let i = index[perm_label(e).as_str()];
        if d.has(e) {
            out.insert(i);
        }
    }
    Ok(out)
}

fn fusion_checks(e: &Entry, p: u64, args: &CorpusArgs, opts: &Options) -> Vec<CorpusCheck> {
    let mut c = Checks(Vec::new());
    let setup = || -> Result<_> {
        let GroupInput::Perm(g) = parse_group(e.text, opts.caps.pc_verify)? else {
            return Err(CliError::Usage("fusion runs need a permutation ambient".into()));
        };
        let s = sylow_auto(&g, p, e.text, opts)?;
        let f: FusionSystem = Realizable::new(&g, &s, &opts.caps, perm_label)?.into();
        let mut ess = essential_subgroups(&f, Mode::Brute)?;
        if args.inject_fake_essential {
            ess.push(fake_essential(&f));
        }
        Ok((g, s, f, ess))
    };
    let (g, s, f, ess) = match setup() {
        Ok(v) => v,
        Err(err) => {
            c.run("setup", || Err(err));
            return c.0;
        }
    };
    let st = Structure::new(f.sylow());

    c.run("essentials_reverified", || {
        let mut bad = Vec::new();
        for r in &ess {
            match essential_report(&f, &r.set)? {
                Some(again) if again.class_tag == r.class_tag && again.out_order == r.out_order => {}
                Some(again) => bad.push(format!("order {}: tag {:?} recomputed as {:?}", r.subgroup.order, r.class_tag, again.class_tag)),
                None => bad.push(format!("order {}: not essential", r.subgroup.order)),
            }
        }
        if st.maximal_class && st.n >= 4 {
            let fast = essential_subgroups(&f, Mode::TheoremD)?;
            let a: Vec<_> = ess.iter().map(|r| &r.set).collect();
            let b: Vec<_> = fast.iter().map(|r| &r.set).collect();
            if a != b {
                bad.push(format!("brute mode found {} classes, theoremD mode {}", a.len(), b.len()));
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { format!("{} essential classes", ess.len()) } else { bad.join("; ") }))
    });

    let focal = focal_data(&f, &ess).map_err(CliError::from);
    c.run("focal_oracle", || {
        let fd = focal.as_ref().map_err(|e| CliError::Computation(e.to_string()))?;
        let oracle = sylow_meet_derived(&g, &f, s.elements())?;
        let detail = format!("|foc| = {}, |S ∩ G′| = {}", TableGroup::order_of(&fd.foc), TableGroup::order_of(&oracle));
        Ok((fd.foc == oracle, detail))
    });

    c.run("saturation", || {
        let rep = saturation_oracle(&f)?;
        Ok((rep.pass(), format!("{} classes, {} failures", rep.f_classes, rep.failures.len())))
    });

    let d = verify_theorem_d(&f, &ess);
    if d.applicable {
        c.verdict("theorem_d", d.pass, d.detail);
    } else {
        c.push("theorem_d", Status::Skipped, d.detail);
    }

    if st.maximal_class {
        c.run("theorem_case", || {
            let fd = focal.as_ref().map_err(|e| CliError::Computation(e.to_string()))?;
            let rep = theorem_case(&FusionSummary::from_system(&f, &ess, fd)?)?;
            Ok((rep.all_decided_hold(), rep.headline()))
        });
    } else {
        c.push("theorem_case", Status::Skipped, "S does not have maximal class");
    }
    c.0
}

pub fn run(args: &CorpusArgs, opts: &Options) -> Result<CorpusReport> {
    let selected = select(args.only.as_deref())?;
    let mut results = Vec::new();
    for e in CORPUS {
        if e.pgroup && selected.iter().any(|r| r == e.name) {
            results.push(RunResult { id: e.name.into(), checks: pgroup_checks(e, opts) });
        }
        for &p in e.primes {
            let id = format!("{}@{p}", e.name);
            if selected.contains(&id) {
                results.push(RunResult { checks: fusion_checks(e, p, args, opts), id });
            }
        }
    }
    let count = |s: Status| results.iter().flat_map(|r| &r.checks).filter(|c| c.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    Ok(CorpusReport { tool_version: TOOL_VERSION.into(), results, passed, failed, skipped, all_pass: failed == 0 })
}
