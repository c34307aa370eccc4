//! `mcf analyze`: invariants of a single finite `p`-group.

use mcf_autact::{action_exponents, aut_group_bruteforce, verify_centralizer_congruence};
use mcf_groupkernel::io::{parse_group, GroupInput};
use mcf_pgroup::battery::maximal_class_battery;
use mcf_pgroup::pgroup::perm_label;
use mcf_pgroup::{maxclass_profile, PGroup, Structure};

use crate::cache::digest;
use crate::error::{CliError, Result};
use crate::options::Options;
use crate::report::{AnalysisReport, AutomorphismSummary};

/// Tabulates the group described by `text`.
pub fn load_pgroup(text: &str, opts: &Options) -> Result<PGroup> {
    let caps = &opts.caps;
    let g = match parse_group(text, caps.pc_verify)? {
        GroupInput::Pc(g) => PGroup::from_pc(&g, caps).map(|r| r.0),
        GroupInput::Perm(g) => PGroup::from_group(&g, caps, perm_label).map(|r| r.0),
    };
    g.map_err(|e| match e {
        mcf_pgroup::PGroupError::NotPGroup(order) => {
            CliError::Usage(format!("group of order {order} is not a p-group; use `mcf fusion -p P` for ambients"))
        }
        e => e.into(),
    })
}

pub fn automorphism_summary(g: &PGroup, opts: &Options) -> Result<AutomorphismSummary> {
    let auts = aut_group_bruteforce(g, &opts.caps)?;
    let st = Structure::new(g);
    let t = g.table();
    let p = g.prime();
    let mut sum = AutomorphismSummary {
        order: auts.len(),
        p_prime_elements: 0,
        action_checked: 0,
        action_violations: 0,
        congruence_checked: 0,
        congruence_violations: 0,
    };
    for f in auts.iter().filter(|f| f.order() % p != 0) {
        sum.p_prime_elements += 1;
        if st.gamma1.is_none() {
            continue;
        }
        let ex = action_exponents(&st, t, f)?;
        sum.action_checked += 1;
        sum.action_violations += (ex.measured != ex.predicted) as usize;
        if !st.is_exceptional() && ex.a != 1 {
            let rep = verify_centralizer_congruence(&st, t, f)?;
            sum.congruence_checked += 1;
            sum.congruence_violations += rep.violations.len();
        }
    }
    Ok(sum)
}

pub fn cmd_analyze(text: &str, opts: &Options) -> Result<AnalysisReport> {
    let input_digest = digest(&[b"group", text.as_bytes()]);
    let mut skipped = Vec::new();
    let g = match opts.capped(|| load_pgroup(text, opts), |why| skipped.push(why))? {
        Some(g) => g,
        None => {
            let mut rep = AnalysisReport::new("analyze", input_digest, 0, 0);
            for why in skipped {
                rep.skip("group", why);
            }
            return Ok(rep);
        }
    };
    let mut rep = AnalysisReport::new("analyze", input_digest, g.prime(), g.n());
    let mut why = Vec::new();
    rep.maxclass_profile = opts.capped(|| Ok(maxclass_profile(&g)?), |w| why.push(("maxclass_profile", w)))?;
    if g.prime() == 2 {
        why.push(("battery", "the battery states facts about odd primes".into()));
    } else {
        rep.battery = opts.capped(|| Ok(maximal_class_battery(&g, &opts.caps)?), |w| why.push(("battery", w)))?;
    }
    rep.automorphisms = opts.capped(|| automorphism_summary(&g, opts), |w| why.push(("automorphisms", w)))?;
    for (section, w) in why {
        rep.skip(section, w);
    }
    Ok(rep)
}
