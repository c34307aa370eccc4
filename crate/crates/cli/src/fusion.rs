//! `mcf fusion`: the fusion system of an ambient group on a Sylow subgroup.

use mcf_classify::{theorem_case, FusionSummary};
use mcf_fusion::{essential_subgroups, focal_data, verify_theorem_d, FusionSystem, Mode, Realizable};
use mcf_groupkernel::io::{parse_group, GroupInput};
use mcf_groupkernel::{is_prime, p_valuation, prime_divisors, scan, FiniteGroup, Perm, PermGroup, Subgroup};
use mcf_pgroup::maxclass_profile;
use mcf_pgroup::pgroup::{pc_label, perm_label};
use mcf_pgroup::Structure;

use crate::cache::digest;
use crate::error::{CliError, Result};
use crate::options::Options;
use crate::report::AnalysisReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum SylowSource {
    /// Found by scanning the ambient group.
    #[default]
    Auto,
    /// Read from the `sylow` key of the ambient file.
    Gens,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum EssentialMode {
    #[default]
    Brute,
    #[value(name = "theoremD")]
    TheoremD,
}

impl From<EssentialMode> for Mode {
    fn from(m: EssentialMode) -> Mode {
        match m {
            EssentialMode::Brute => Mode::Brute,
            EssentialMode::TheoremD => Mode::TheoremD,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FusionArgs {
    pub p: Option<u64>,
    pub sylow: SylowSource,
    pub mode: EssentialMode,
}

/// `p` if given, else the unique prime dividing `order`.
pub fn choose_prime(order: u128, p: Option<u64>) -> Result<u64> {
    match p {
        Some(p) if !is_prime(p) => Err(CliError::Usage(format!("{p} is not prime"))),
        Some(p) if order % p as u128 != 0 => Err(CliError::Usage(format!("{p} does not divide |G| = {order}"))),
        Some(p) => Ok(p),
        None => match prime_divisors(order).as_slice() {
            [p] => Ok(*p),
            _ => Err(CliError::Usage(format!("|G| = {order} has several prime divisors; pass -p"))),
        },
    }
}

fn sylow_order(order: u128, p: u64) -> u128 {
    (p as u128).pow(p_valuation(order, p))
}

fn generate_sylow(g: &PermGroup, p: u64, gens: Vec<Perm>, opts: &Options) -> Result<Option<Subgroup<Perm>>> {
    if gens.iter().any(|x| !g.has(x)) {
        return Ok(None);
    }
    let s = Subgroup::generate(g, gens, opts.caps.max_scan)?;
    Ok((s.order() == sylow_order(g.order(), p)).then_some(s))
}

fn parse_perms(v: &serde_json::Value) -> Result<Vec<Perm>> {
    let rows: Vec<Vec<u32>> = serde_json::from_value(v.clone())?;
    Ok(rows.into_iter().map(Perm::new).collect::<std::result::Result<_, _>>()?)
}

/// A Sylow subgroup found by scanning, remembered in the cache by the input digest.
pub fn sylow_auto(g: &PermGroup, p: u64, text: &str, opts: &Options) -> Result<Subgroup<Perm>> {
    let key = digest(&[b"sylow", text.as_bytes(), p.to_string().as_bytes()]);
    if let Some(bytes) = opts.cache.get("sylow", &key) {
        let hit = serde_json::from_slice::<serde_json::Value>(&bytes).ok().and_then(|v| parse_perms(&v).ok());
        if let Some(s) = hit.map(|gens| generate_sylow(g, p, gens, opts)).transpose()?.flatten() {
            return Ok(s);
        }
    }
    let s = scan::sylow_p(g, p, &opts.caps)?;
    let gens: Vec<&[u32]> = s.gens().iter().map(Perm::images).collect();
    opts.cache.put("sylow", &key, serde_json::to_string(&gens)?.as_bytes())?;
    Ok(s)
}

/// The subgroup generated by the `sylow` key of the ambient file.
pub fn sylow_listed(g: &PermGroup, p: u64, text: &str, opts: &Options) -> Result<Subgroup<Perm>> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    let listed = v.get("sylow").ok_or_else(|| CliError::Usage("--sylow gens needs a \"sylow\" key".into()))?;
    let gens = parse_perms(listed)?;
    generate_sylow(g, p, gens, opts)?.ok_or_else(|| {
        CliError::Usage(format!("listed generators do not give a Sylow {p}-subgroup of G"))
    })
}

pub fn cmd_fusion(text: &str, args: &FusionArgs, opts: &Options) -> Result<AnalysisReport> {
    let input_digest = digest(&[b"group", text.as_bytes()]);
    match parse_group(text, opts.caps.pc_verify)? {
        GroupInput::Perm(g) => {
            let p = choose_prime(g.order(), args.p)?;
            let mut why = None;
            let s = opts.capped(
                || match args.sylow {
                    SylowSource::Auto => sylow_auto(&g, p, text, opts),
                    SylowSource::Gens => sylow_listed(&g, p, text, opts),
                },
                |w| why = Some(w),
            )?;
            match s {
                Some(s) => run(&g, &s, perm_label, args.mode.into(), input_digest, opts),
                None => Ok(skipped_report(input_digest, p, "sylow", why.unwrap_or_default())),
            }
        }
        GroupInput::Pc(g) => {
            choose_prime(g.order(), args.p)?;
            if args.sylow == SylowSource::Gens {
                return Err(CliError::Usage("--sylow gens applies to permutation ambients".into()));
            }
            let s = Subgroup::generate(&g, g.generators(), opts.caps.max_scan)?;
            run(&g, &s, |v| pc_label(v), args.mode.into(), input_digest, opts)
        }
    }
}

fn skipped_report(input_digest: String, p: u64, section: &str, why: String) -> AnalysisReport {
    let mut rep = AnalysisReport::new("fusion", input_digest, p, 0);
    rep.skip(section, why);
    rep
}

fn run<G: FiniteGroup>(
    g: &G,
    s: &Subgroup<G::Elem>,
    label: impl Fn(&G::Elem) -> String,
    mode: Mode,
    input_digest: String,
    opts: &Options,
) -> Result<AnalysisReport> {
    let p = prime_divisors(s.order()).first().copied().unwrap_or(2);
    let mut why = None;
    let r = opts.capped(|| Ok(Realizable::new(g, s, &opts.caps, label)?), |w| why = Some(w))?;
    let Some(r) = r else {
        return Ok(skipped_report(input_digest, p, "fusion", why.unwrap_or_default()));
    };
    let f: FusionSystem = r.into();
    let sy = f.sylow();
    let mut rep = AnalysisReport::new("fusion", input_digest, f.prime(), sy.n());
    let mut skips = Vec::new();
    rep.maxclass_profile = opts.capped(|| Ok(maxclass_profile(sy)?), |w| skips.push(w))?;
    if rep.maxclass_profile.is_none() {
        rep.skip("maxclass_profile", skips.concat());
        skips.clear();
    }

    let Some(ess) = opts.capped(|| Ok(essential_subgroups(&f, mode)?), |w| skips.push(w))? else {
        rep.skip("essentials", skips.concat());
        return Ok(rep);
    };
    let Some(fd) = opts.capped(|| Ok(focal_data(&f, &ess)?), |w| skips.push(w))? else {
        rep.skip("focal", skips.concat());
        rep.essentials = Some(ess);
        return Ok(rep);
    };
    let fs = fd.summary(&f);
    rep.focal = Some(fs.focal);
    rep.hyperfocal = Some(fs.hyperfocal);
    rep.index_s_hyp = Some(fs.index_s_hyp);
    rep.op = Some(fs.op);
    rep.theorem_d = Some(verify_theorem_d(&f, &ess));
    if Structure::new(sy).maximal_class {
        match opts.capped(|| Ok(FusionSummary::from_system(&f, &ess, &fd)?), |w| skips.push(w))? {
            Some(sum) => {
                rep.theorem_case = Some(theorem_case(&sum)?);
                rep.summary = Some(sum);
            }
            None => rep.skip("theorem_case", skips.concat()),
        }
    } else {
        rep.skip("theorem_case", "S does not have maximal class");
    }
    rep.essentials = Some(ess);
    Ok(rep)
}
