use mcf_pgroup::Structure;
use mcf_groupkernel::TableGroup;
use serde::Serialize;

use crate::auto::Auto;
use crate::error::{AutError, Result};

/// An element `(r, s)` of `GF(p)^× × GF(p)^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DeltaElement {
    pub r: u64,
    pub s: u64,
}

impl DeltaElement {
    pub fn one() -> Self {
        DeltaElement { r: 1, s: 1 }
    }

    pub fn mul(&self, other: &DeltaElement, p: u64) -> DeltaElement {
        DeltaElement { r: self.r * other.r % p, s: self.s * other.s % p }
    }
}

/// The exponent `e ∈ 1..p` with `y ≡ x^e` modulo `quot`, if any.
pub(crate) fn exponent_mod(t: &TableGroup, x: u32, y: u32, quot: &mcf_groupkernel::ElemSet, p: u64) -> Option<u64> {
    let mut xe = 0u32;
    for e in 0..p {
        if quot.contains(t.mul(t.inverse(xe), y) as usize) {
            return Some(e);
        }
        xe = t.mul(xe, x);
    }
    None
}

/// `μ(φ) = (r, s)` with `xφ ≡ x^r mod γ₁(S)` for `x ∉ γ₁(S)` and
/// `zφ = z^s` on `Z(S)`.
pub fn mu(st: &Structure, t: &TableGroup, phi: &Auto) -> Result<DeltaElement> {
    let g1 = st.gamma1.as_ref().ok_or(AutError::NotMaximalClass)?;
    let p = st.p;
    let x = (0..t.size() as u32).find(|&x| !g1.contains(x as usize)).expect("proper subgroup");
    let z = st.z(1).ones().map(|z| z as u32).find(|&z| z != 0).expect("nontrivial centre");
    let r = exponent_mod(t, x, phi.apply(x), g1, p).ok_or(AutError::NotMaximalClass)?;
    let s = exponent_mod(t, z, phi.apply(z), &t.trivial(), p).ok_or(AutError::NotMaximalClass)?;
    Ok(DeltaElement { r, s })
}
