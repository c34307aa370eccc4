//! `mcf classify`: theorem dispatch, table lookups and the monomial family.

use mcf_classify::delta::{self, DeltaSet};
use mcf_classify::tables::MuSpec;
use mcf_classify::{
    construct_example_family, table1_lookup, table21_constellation, table3_lookup, theorem_case, DeltaSubgroup,
    FamilyCertificate, FusionSummary, TheoremCaseReport,
};
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::options::Options;

pub fn case(summary_json: &str) -> Result<TheoremCaseReport> {
    let s: FusionSummary = serde_json::from_str(summary_json)?;
    Ok(theorem_case(&s)?)
}

/// `none`, `square`, `pair:A,B` for `{(u^A, u^B)}` or `delta:K/L:I`.
pub fn parse_mu(spec: &str) -> Result<MuSpec> {
    let bad = || CliError::Usage(format!("bad μ spec {spec:?}; expected none, square, pair:A,B or delta:K/L:I"));
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "none" => Ok(MuSpec::None),
        "square" => Ok(MuSpec::SquareAny),
        "pair" => {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            Ok(MuSpec::PowerPair { a: a.trim().into(), b: b.trim().into() })
        }
        "delta" => {
            let (kl, i) = rest.split_once(':').ok_or_else(bad)?;
            let (k, l) = kl.split_once('/').ok_or_else(bad)?;
            let num = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
            Ok(MuSpec::Delta { k: num(k)?, l: num(l)?, index: i.trim().parse().map_err(|_| bad())? })
        }
        _ => Err(bad()),
    }
}

/// `full`, `delta:I` for the diagonal `Δ_I`, or any μ spec accepted by [`parse_mu`].
pub fn parse_image(p: u64, spec: &str) -> Result<DeltaSet> {
    if spec == "full" {
        return Ok(delta::full(p));
    }
    if let Some(i) = spec.strip_prefix("delta:").filter(|s| !s.contains('/')) {
        let i: i64 = i.trim().parse().map_err(|_| CliError::Usage(format!("bad image {spec:?}")))?;
        return Ok(DeltaSubgroup::diagonal(p, i).elements);
    }
    parse_mu(spec)?
        .at(p, None)?
        .ok_or_else(|| CliError::Usage("an image must name a subgroup of Δ".into()))
}

pub fn table1(p: u64, y: &str, m: u32, mu: Option<&str>) -> Result<Value> {
    let image = mu.map(parse_mu).transpose()?.map(|s| s.at(p, None)).transpose()?.flatten();
    let rows = table1_lookup(p, y, m, image.as_ref())?;
    Ok(serde_json::to_value(rows)?)
}

pub fn table21(p: u64, m: u32, image: &str) -> Result<Value> {
    let set = parse_image(p, image)?;
    Ok(serde_json::to_value(table21_constellation(&set, m, p)?)?)
}

pub fn table3(family: &str, p: u64, q: Option<u64>) -> Result<Value> {
    Ok(serde_json::to_value(table3_lookup(family, p, q)?)?)
}

pub fn family(p: u64, r: u64, a: u32, opts: &Options) -> Result<FamilyCertificate> {
    Ok(construct_example_family(p, r, a, &opts.caps)?.certificate)
}
