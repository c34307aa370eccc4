//! `mcf rep`: modules for `SL₂(p)` over `GF(p)`.

use mcf_repsl2::poly::{action_matrix, unipotent};
use mcf_repsl2::{
    clebsch_gordan_decompose, feit_bound_check, jordan_block_analysis, lambda2_s2_decompose, nonzero_witness,
    torus_fixed_points, transvectant, Form, JordanReport,
};
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct Degrees {
    pub p: u64,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    pub degrees: Vec<usize>,
    pub certified: bool,
}

/// `V_d ⊗ V_e`; the full decomposition with projections when `projections` is set.
pub fn tensor(p: u64, d: usize, e: usize, projections: bool) -> Result<Value> {
    let dec = clebsch_gordan_decompose(p, d, e)?;
    if projections {
        return Ok(serde_json::to_value(dec)?);
    }
    let out = Degrees { p, d, e: Some(e), degrees: dec.degrees(), certified: dec.certificate.holds() };
    Ok(serde_json::to_value(out)?)
}

/// `Λ²(V_d)` when `alternating`, else `S²(V_d)`.
pub fn square(p: u64, d: usize, alternating: bool, projections: bool) -> Result<Value> {
    let split = lambda2_s2_decompose(p, d)?;
    if projections {
        return Ok(serde_json::to_value(split)?);
    }
    let degrees = if alternating { split.lambda2_degrees() } else { split.s2_degrees() };
    Ok(serde_json::to_value(Degrees { p, d, e: None, degrees, certified: split.holds() })?)
}

#[derive(Clone, Debug, Serialize)]
pub struct Transvected {
    pub p: u64,
    pub r: usize,
    pub f: String,
    pub g: String,
    pub image: String,
    pub nonzero: bool,
}

pub fn transvect(p: u64, r: usize, f: &str, g: &str) -> Result<Value> {
    let (ff, gg) = (Form::parse(p, f)?, Form::parse(p, g)?);
    let image = transvectant(r, &ff, &gg)?;
    let out = Transvected { p, r, f: ff.to_string(), g: gg.to_string(), nonzero: !image.is_zero(), image: image.to_string() };
    Ok(serde_json::to_value(out)?)
}

pub fn nonzero(p: u64) -> Result<Value> {
    Ok(serde_json::to_value(nonzero_witness(p)?)?)
}

pub fn torus(p: u64, e: usize) -> Result<Value> {
    Ok(serde_json::to_value(torus_fixed_points(p, e)?)?)
}

/// Jordan blocks of a transvection on `V_d`, or on `V_d ⊗ V_e`.
pub fn jordan(p: u64, d: usize, e: Option<usize>) -> Result<JordanReport> {
    let check = |k: usize| mcf_repsl2::build_ve(p, k).map(|_| ());
    check(d)?;
    let u = unipotent(p);
    let mut m = action_matrix(p, d, &u);
    if let Some(e) = e {
        check(e)?;
        m = m.kron(&action_matrix(p, e, &u));
    }
    Ok(jordan_block_analysis(&m)?)
}

pub fn feit(p: u64, d: usize, l2p_type: bool) -> Result<Value> {
    mcf_repsl2::field::check_prime(p)?;
    Ok(serde_json::to_value(feit_bound_check(p, d, l2p_type))?)
}
