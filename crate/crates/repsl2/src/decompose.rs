//! Constructive decompositions of `V_d ⊗ V_e`, `S²(V_d)` and `Λ²(V_d)`.
//!
//! A decomposition is accepted only when each projection is onto, the stacked
//! projection is injective, and every projection intertwines the generators.

use serde::Serialize;

use crate::error::{RepError, Result};
use crate::field::{check_prime, pow_mod};
use crate::matrix::GFpMatrix;
use crate::poly::{action_matrix, mat2, mat2_det, torus, unipotent, weyl, Mat2};
use crate::transvectant::{swap_matrix, theta_matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub degree: usize,
    /// Transvectant order of the projection.
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection: Option<GFpMatrix>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub surjective: bool,
    pub injective: bool,
    pub equivariant: bool,
    pub dimension_sum: usize,
    pub ambient_dimension: usize,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.surjective && self.injective && self.equivariant && self.dimension_sum == self.ambient_dimension
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: u64,
    pub d: usize,
    pub e: usize,
    pub summands: Vec<Summand>,
    pub certificate: Certificate,
}

impl Decomposition {
    pub fn degrees(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.degree).collect()
    }

    pub fn strip_projections(mut self) -> Self {
        for s in &mut self.summands {
            s.projection = None;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricSplit {
    pub p: u64,
    pub d: usize,
    pub s2: Vec<Summand>,
    pub lambda2: Vec<Summand>,
    pub s2_certificate: Certificate,
    pub lambda2_certificate: Certificate,
    /// Projections of the wrong parity vanish on each part.
    pub parity_vanishing: bool,
}

impl SymmetricSplit {
    pub fn s2_degrees(&self) -> Vec<usize> {
        self.s2.iter().map(|s| s.degree).collect()
    }

    pub fn lambda2_degrees(&self) -> Vec<usize> {
        self.lambda2.iter().map(|s| s.degree).collect()
    }

    pub fn holds(&self) -> bool {
        self.parity_vanishing && self.s2_certificate.holds() && self.lambda2_certificate.holds()
    }
}

/// Generators of `SL₂(p)` plus a non-unimodular diagonal element for the determinant twist.
fn test_elements(p: u64) -> Vec<Mat2> {
    vec![unipotent(p), weyl(p), torus(p), mat2(p, [[crate::field::primitive_root(p) as i64, 0], [0, 1]])]
}

fn intertwines(p: u64, d: usize, e: usize, r: usize, theta: &GFpMatrix) -> bool {
    let out = d + e - 2 * r;
    test_elements(p).iter().all(|c| {
        let lhs = action_matrix(p, d, c).kron(&action_matrix(p, e, c)).mul(theta);
        let rhs = theta.mul(&action_matrix(p, out, c)).scale(pow_mod(mat2_det(p, c), r as u64, p));
        lhs == rhs
    })
}

pub fn clebsch_gordan_decompose(p: u64, d: usize, e: usize) -> Result<Decomposition> {
    check_prime(p)?;
    if d < e {
        return Err(RepError::Hypothesis(format!("needs d ≥ e, got d = {d}, e = {e}")));
    }
    if d + e > (p - 1) as usize {
        return Err(RepError::Hypothesis(format!("needs d + e ≤ p − 1, got {} > {}", d + e, p - 1)));
    }
    let ambient = (d + 1) * (e + 1);
    let mut cert = Certificate { surjective: true, equivariant: true, ambient_dimension: ambient, ..Default::default() };
    let mut summands = Vec::new();
    for r in 0..=e {
        let theta = theta_matrix(p, d, e, r)?;
        let degree = d + e - 2 * r;
        cert.surjective &= theta.rank() == degree + 1;
        cert.equivariant &= intertwines(p, d, e, r, &theta);
        cert.dimension_sum += degree + 1;
        summands.push(Summand { degree, r, projection: Some(theta) });
    }
    let parts: Vec<&GFpMatrix> = summands.iter().filter_map(|s| s.projection.as_ref()).collect();
    cert.injective = GFpMatrix::hstack(&parts).rank() == ambient;
    Ok(Decomposition { p, d, e, summands, certificate: cert })
}

/// Certifies one eigenspace of the swap, given as a row basis, against the orders `rs`.
fn certify_part(p: u64, d: usize, basis: &GFpMatrix, thetas: &[GFpMatrix], rs: &[usize]) -> (Vec<Summand>, Certificate) {
    let mut cert = Certificate { surjective: true, equivariant: true, ambient_dimension: basis.rows(), ..Default::default() };
    let mut summands = Vec::new();
    let mut restricted = Vec::new();
    for &r in rs {
        let proj = basis.mul(&thetas[r]);
        let degree = 2 * d - 2 * r;
        cert.surjective &= proj.rank() == degree + 1;
        cert.equivariant &= intertwines(p, d, d, r, &thetas[r]);
        cert.dimension_sum += degree + 1;
        restricted.push(proj.clone());
        summands.push(Summand { degree, r, projection: Some(proj) });
    }
    cert.injective = if restricted.is_empty() {
        basis.rows() == 0
    } else {
        GFpMatrix::hstack(&restricted.iter().collect::<Vec<_>>()).rank() == basis.rows()
    };
    // The eigenspace must itself be a submodule.
    cert.equivariant &= test_elements(p).iter().all(|c| {
        let g = action_matrix(p, d, c);
        g.kron(&g).restrict(basis).is_ok()
    });
    (summands, cert)
}

pub fn lambda2_s2_decompose(p: u64, d: usize) -> Result<SymmetricSplit> {
    check_prime(p)?;
    if 2 * d > (p - 1) as usize {
        return Err(RepError::Hypothesis(format!("needs 2d ≤ p − 1, got {} > {}", 2 * d, p - 1)));
    }
    let n = (d + 1) * (d + 1);
    let swap = swap_matrix(p, d);
    let id = GFpMatrix::identity(p, n);
    let s2 = swap.sub(&id).left_kernel();
    let l2 = swap.add(&id).left_kernel();
    let thetas: Vec<GFpMatrix> = (0..=d).map(|r| theta_matrix(p, d, d, r)).collect::<Result<_>>()?;
    let even: Vec<usize> = (0..=d).step_by(2).collect();
    let odd: Vec<usize> = (1..=d).step_by(2).collect();
    let parity_vanishing = odd.iter().all(|&r| s2.mul(&thetas[r]).is_zero())
        && even.iter().all(|&r| l2.rows() == 0 || l2.mul(&thetas[r]).is_zero());
    let (s2_parts, s2_certificate) = certify_part(p, d, &s2, &thetas, &even);
    let (l2_parts, lambda2_certificate) = certify_part(p, d, &l2, &thetas, &odd);
    Ok(SymmetricSplit {
        p,
        d,
        s2: s2_parts,
        lambda2: l2_parts,
        s2_certificate,
        lambda2_certificate,
        parity_vanishing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let dec = clebsch_gordan_decompose(7, 2, 2).unwrap();
        assert_eq!(dec.degrees(), vec![4, 2, 0]);
        assert!(dec.certificate.holds());
        assert_eq!(dec.certificate.dimension_sum, 9);
        assert_eq!(clebsch_gordan_decompose(11, 3, 2).unwrap().degrees(), vec![5, 3, 1]);
        assert_eq!(clebsch_gordan_decompose(5, 0, 0).unwrap().degrees(), vec![0]);
        assert!(clebsch_gordan_decompose(7, 4, 3).is_err());
        assert!(clebsch_gordan_decompose(7, 1, 2).is_err());
    }

    #[test]
    fn symmetric_split_small() {
        let s = lambda2_s2_decompose(11, 4).unwrap();
        assert_eq!(s.lambda2_degrees(), vec![6, 2]);
        assert_eq!(s.s2_degrees(), vec![8, 4, 0]);
        assert!(s.holds());
        let s = lambda2_s2_decompose(5, 1).unwrap();
        assert_eq!(s.lambda2_degrees(), vec![0]);
        assert!(s.holds());
        assert!(lambda2_s2_decompose(7, 4).is_err());
    }

    #[test]
    fn projections_stop_separating_past_the_bound() {
        // V_3 ⊗ V_2 over GF(5): the stacked projections have rank 8, not 12.
        let parts: Vec<GFpMatrix> = (0..=2).map(|r| theta_matrix(5, 3, 2, r).unwrap()).collect();
        assert_eq!(GFpMatrix::hstack(&parts.iter().collect::<Vec<_>>()).rank(), 8);
    }
}
