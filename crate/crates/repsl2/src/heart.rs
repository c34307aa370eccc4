//! The natural permutation module of `Sym(p)` and its heart.

use serde::Serialize;

use crate::error::{RepError, Result};
use crate::field::check_prime;
use crate::matrix::GFpMatrix;

/// A module given by named generator matrices acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixModule {
    pub p: u64,
    pub dim: usize,
    pub generators: Vec<(String, GFpMatrix)>,
}

impl MatrixModule {
    pub fn generator(&self, name: &str) -> Option<&GFpMatrix> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    /// The submodule spanned by the rows of `basis`, in that basis.
    pub fn submodule(&self, basis: &GFpMatrix) -> Result<MatrixModule> {
        if basis.rank() != basis.rows() {
            return Err(RepError::Dimension("submodule basis is dependent".into()));
        }
        let generators = self
            .generators
            .iter()
            .map(|(n, m)| Ok((n.clone(), m.restrict(basis)?)))
            .collect::<Result<_>>()?;
        Ok(MatrixModule { p: self.p, dim: basis.rows(), generators })
    }

    /// The quotient by the submodule spanned by `sub`, on a complement of standard vectors.
    pub fn quotient(&self, sub: &GFpMatrix) -> Result<MatrixModule> {
        let p = self.p;
        let k = sub.rows();
        if sub.rank() != k {
            return Err(RepError::Dimension("submodule basis is dependent".into()));
        }
        let mut full = sub.clone();
        for i in 0..self.dim {
            let mut e = GFpMatrix::zeros(p, 1, self.dim);
            e.set(0, i, 1);
            let cand = GFpMatrix::vstack(p, self.dim, &[&full, &e]);
            if cand.rank() == cand.rows() {
                full = cand;
            }
        }
        let mut generators = Vec::new();
        for (n, m) in &self.generators {
            let whole = m.restrict(&full)?;
            for i in 0..k {
                if (k..self.dim).any(|j| whole.get(i, j) != 0) {
                    return Err(RepError::Dimension("subspace is not invariant".into()));
                }
            }
            let q = self.dim - k;
            let mut out = GFpMatrix::zeros(p, q, q);
            for i in 0..q {
                for j in 0..q {
                    out.set(i, j, whole.get(k + i, k + j));
                }
            }
            generators.push((n.clone(), out));
        }
        Ok(MatrixModule { p, dim: self.dim - k, generators })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationHeart {
    pub natural: MatrixModule,
    /// The augmentation kernel `S^{p−1,1}`.
    pub augmentation: MatrixModule,
    /// `D^{p−1,1}`, the augmentation kernel modulo the all-ones vector.
    pub heart: MatrixModule,
    pub ones_in_kernel: bool,
}

fn permutation_matrix(p: u64, image: &[usize]) -> GFpMatrix {
    let n = image.len();
    let mut m = GFpMatrix::zeros(p, n, n);
    for (i, &j) in image.iter().enumerate() {
        m.set(i, j, 1);
    }
    m
}

/// Generators are the transposition `(0 1)` and the cycle `i ↦ i + 1 mod p`.
pub fn permutation_module_heart(p: u64) -> Result<PermutationHeart> {
    check_prime(p)?;
    let n = p as usize;
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let natural = MatrixModule {
        p,
        dim: n,
        generators: vec![
            ("transposition".into(), permutation_matrix(p, &swap)),
            ("p-cycle".into(), permutation_matrix(p, &cycle)),
        ],
    };
    let augmentation_map = GFpMatrix::new(p, n, 1, vec![1; n]);
    let kernel = augmentation_map.left_kernel();
    let augmentation = natural.submodule(&kernel)?;
    let ones = vec![1u64; n];
    let ones_in_kernel = augmentation_map.apply(&ones)[0] == 0;
    let coords = GFpMatrix::solve_in_rowspace(&kernel, &ones)
        .ok_or_else(|| RepError::Dimension("all-ones vector outside the augmentation kernel".into()))?;
    let heart = augmentation.quotient(&GFpMatrix::new(p, 1, kernel.rows(), coords))?;
    Ok(PermutationHeart { natural, augmentation, heart, ones_in_kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::jordan_block_analysis;

    #[test]
    fn dimensions_and_cycle_block() {
        for p in [3u64, 5, 7, 11] {
            let h = permutation_module_heart(p).unwrap();
            assert_eq!(h.augmentation.dim, p as usize - 1);
            assert_eq!(h.heart.dim, p as usize - 2);
            assert!(h.ones_in_kernel);
            let c = h.heart.generator("p-cycle").unwrap();
            assert_eq!(jordan_block_analysis(c).unwrap().block_sizes, vec![p as usize - 2]);
            let t = h.heart.generator("transposition").unwrap();
            assert_eq!(t.mul(t), GFpMatrix::identity(p, p as usize - 2));
            assert_eq!(c.pow(p), GFpMatrix::identity(p, p as usize - 2));
        }
    }
}
