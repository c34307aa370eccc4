//! The operator `Ω` on `V_d ⊗ V_e` and the transvectants `Θ_r = Ω^r μ`.
//!
//! Tensor coordinates are indexed `i * (e + 1) + j` for `b_i ⊗ b_j`, matching
//! [`GFpMatrix::kron`] of the factor actions.

use serde::Serialize;

use crate::error::{RepError, Result};
use crate::field::{binom_mod, check_prime, falling_mod};
use crate::matrix::GFpMatrix;
use crate::poly::Form;

/// `Ω : V_d ⊗ V_e → V_{d−1} ⊗ V_{e−1}`, requires `d, e ≥ 1`.
pub fn omega_matrix(p: u64, d: usize, e: usize) -> GFpMatrix {
    assert!(d >= 1 && e >= 1, "Ω needs positive degrees");
    let mut m = GFpMatrix::zeros(p, (d + 1) * (e + 1), d * e);
    for i in 0..=d {
        for j in 0..=e {
            let row = i * (e + 1) + j;
            // ∂x b_i ⊗ ∂y b_j
            if i < d && j > 0 {
                m.add_to(row, i * e + (j - 1), ((d - i) * j) as u64 % p);
            }
            // − ∂y b_i ⊗ ∂x b_j
            if i > 0 && j < e {
                let c = (i * (e - j)) as u64 % p;
                m.add_to(row, (i - 1) * e + j, (p - c) % p);
            }
        }
    }
    m
}

/// Multiplication `μ : V_d ⊗ V_e → V_{d+e}`.
pub fn mult_matrix(p: u64, d: usize, e: usize) -> GFpMatrix {
    let mut m = GFpMatrix::zeros(p, (d + 1) * (e + 1), d + e + 1);
    for i in 0..=d {
        for j in 0..=e {
            m.set(i * (e + 1) + j, i + j, 1);
        }
    }
    m
}

/// `Θ_r : V_d ⊗ V_e → V_{d+e−2r}`.
pub fn theta_matrix(p: u64, d: usize, e: usize, r: usize) -> Result<GFpMatrix> {
    check_prime(p)?;
    if r > d.min(e) {
        return Err(RepError::TransvectantOrder { r, d, e });
    }
    let mut m = GFpMatrix::identity(p, (d + 1) * (e + 1));
    for k in 0..r {
        m = m.mul(&omega_matrix(p, d - k, e - k));
    }
    Ok(m.mul(&mult_matrix(p, d - r, e - r)))
}

/// The swap `ι : b_i ⊗ b_j ↦ b_j ⊗ b_i` on `V_d ⊗ V_d`.
pub fn swap_matrix(p: u64, d: usize) -> GFpMatrix {
    let n = d + 1;
    let mut m = GFpMatrix::zeros(p, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            m.set(i * n + j, j * n + i, 1);
        }
    }
    m
}

/// Coordinates of `f ⊗ g`.
pub fn tensor(f: &Form, g: &Form) -> Vec<u64> {
    let p = f.p;
    f.coeffs.iter().flat_map(|&a| g.coeffs.iter().map(move |&b| a * b % p)).collect()
}

/// `Θ_r(f ⊗ g)` as a form of degree `deg f + deg g − 2r`.
pub fn transvectant(r: usize, f: &Form, g: &Form) -> Result<Form> {
    if f.p != g.p {
        return Err(RepError::Dimension("forms over different primes".into()));
    }
    let m = theta_matrix(f.p, f.degree, g.degree, r)?;
    let coeffs = m.apply(&tensor(f, g));
    Ok(Form { p: f.p, degree: f.degree + g.degree - 2 * r, coeffs })
}

/// Evidence that `Θ_{(p−3)/2}(x^{p−3} ⊗ y^{p−3})` is a nonzero multiple of `(xy)^{(p−3)/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonZeroWitness {
    pub p: u64,
    pub r: usize,
    pub image: String,
    /// Coefficient of `(xy)^r` in the computed image.
    pub coefficient: u64,
    /// `C(p−3, r)² mod p`, for comparison with the closed form.
    pub binomial_squared: u64,
    /// Whether every other coefficient vanishes.
    pub pure: bool,
    pub nonzero: bool,
}

pub fn nonzero_witness(p: u64) -> Result<NonZeroWitness> {
    check_prime(p)?;
    if p < 5 {
        return Err(RepError::Hypothesis(format!("needs p ≥ 5, got {p}")));
    }
    let n = (p - 3) as usize;
    let r = n / 2;
    let image = transvectant(r, &Form::monomial(p, n, 0), &Form::monomial(p, 0, n))?;
    let coefficient = image.coeffs[r];
    let pure = image.coeffs.iter().enumerate().all(|(j, &c)| j == r || c == 0);
    let b = binom_mod(n as u64, r as u64, p);
    Ok(NonZeroWitness {
        p,
        r,
        image: image.to_string(),
        coefficient,
        binomial_squared: b * b % p,
        pure,
        nonzero: coefficient != 0,
    })
}

/// `∏_{k<r} (a−k)(b−k) mod p`: the coefficient of `Θ_r(x^a ⊗ y^b)`.
pub fn monomial_coefficient(p: u64, a: usize, b: usize, r: usize) -> u64 {
    falling_mod(a as u64, r as u64, p) * falling_mod(b as u64, r as u64, p) % p
}
