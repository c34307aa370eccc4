//! Jordan structure of unipotent elements and torus fixed points on `V_e`.

use serde::Serialize;

use crate::error::{RepError, Result};
use crate::field::check_prime;
use crate::matrix::GFpMatrix;
use crate::poly::{action_matrix, torus};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanReport {
    /// Block sizes of `u − 1`, largest first.
    pub block_sizes: Vec<usize>,
    pub min_poly_degree: usize,
    pub minimally_active: bool,
}

/// Block sizes from the ranks of `(u − 1)^k`.
pub fn jordan_block_analysis(u: &GFpMatrix) -> Result<JordanReport> {
    if !u.is_square() {
        return Err(RepError::Dimension("unipotent element must be square".into()));
    }
    let n = u.rows();
    let nil = u.sub(&GFpMatrix::identity(u.prime(), n));
    let mut ranks = vec![n];
    let mut power = GFpMatrix::identity(u.prime(), n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(RepError::NotUnipotent);
        }
        power = power.mul(&nil);
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(RepError::NotUnipotent);
        }
        ranks.push(r);
    }
    // at_least[k] = number of blocks of size ≥ k + 1.
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut block_sizes = Vec::new();
    for k in (0..at_least.len()).rev() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        block_sizes.extend(std::iter::repeat(k + 1).take(at_least[k] - next));
    }
    let nontrivial = block_sizes.iter().filter(|&&s| s > 1).count();
    Ok(JordanReport {
        min_poly_degree: block_sizes.first().copied().unwrap_or(0),
        block_sizes,
        minimally_active: nontrivial == 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusFixed {
    pub p: u64,
    pub e: usize,
    pub dim: usize,
    /// Layers `k` of the series `[V, T; k]` met by the fixed space.
    pub positions: Vec<usize>,
}

/// `C_V(H)` for `V = V_e` and `H = ⟨diag(λ, λ⁻¹)⟩`.
///
/// `[V, T; k]` is spanned by the basis vectors `j ≥ k`, so a fixed vector sits in
/// the layer of its least supported index.
pub fn torus_fixed_points(p: u64, e: usize) -> Result<TorusFixed> {
    check_prime(p)?;
    let max = (p - 1) as usize;
    if e > max {
        return Err(RepError::DegreeOutOfRange { e, max });
    }
    let h = action_matrix(p, e, &torus(p));
    let fixed = h.sub(&GFpMatrix::identity(p, e + 1)).left_kernel();
    let mut positions: Vec<usize> =
        (0..fixed.rows()).filter_map(|i| fixed.row(i).iter().position(|&c| c != 0)).collect();
    positions.sort_unstable();
    Ok(TorusFixed { p, e, dim: fixed.rows(), positions })
}
