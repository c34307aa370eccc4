//! The JSON report emitted by `analyze` and `fusion`.
//!
//! Every key is always present; sections that were not computed are `null`
//! and, when a cap prevented them, listed under `skipped`.

use mcf_classify::{FusionSummary, TheoremCaseReport};
use mcf_fusion::{EssentialReport, TheoremDReport};
use mcf_pgroup::battery::Check;
use mcf_pgroup::{MaxClassProfile, SubgroupSummary};
use serde::Serialize;

use crate::error::Result;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Skipped {
    pub section: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismSummary {
    pub order: usize,
    pub p_prime_elements: usize,
    pub action_checked: usize,
    /// `p′`-automorphisms whose measured level exponents differ from the prediction.
    pub action_violations: usize,
    pub congruence_checked: usize,
    pub congruence_violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub tool_version: String,
    pub command: String,
    pub input_digest: String,
    pub prime: u64,
    pub order_log: u32,
    pub maxclass_profile: Option<MaxClassProfile>,
    pub battery: Option<Vec<Check>>,
    pub automorphisms: Option<AutomorphismSummary>,
    pub essentials: Option<Vec<EssentialReport>>,
    pub focal: Option<SubgroupSummary>,
    pub hyperfocal: Option<SubgroupSummary>,
    pub index_s_hyp: Option<u128>,
    #[serde(rename = "Op")]
    pub op: Option<SubgroupSummary>,
    #[serde(rename = "theoremD")]
    pub theorem_d: Option<TheoremDReport>,
    pub summary: Option<FusionSummary>,
    pub theorem_case: Option<TheoremCaseReport>,
    pub skipped: Vec<Skipped>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl AnalysisReport {
    pub fn new(command: &str, input_digest: String, prime: u64, order_log: u32) -> Self {
        AnalysisReport {
            tool_version: TOOL_VERSION.into(),
            command: command.into(),
            input_digest,
            prime,
            order_log,
            maxclass_profile: None,
            battery: None,
            automorphisms: None,
            essentials: None,
            focal: None,
            hyperfocal: None,
            index_s_hyp: None,
            op: None,
            theorem_d: None,
            summary: None,
            theorem_case: None,
            skipped: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn skip(&mut self, section: &str, reason: impl Into<String>) {
        self.skipped.push(Skipped { section: section.into(), reason: reason.into() });
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
