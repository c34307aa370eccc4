//! Dense matrices over `GF(p)`, with vectors as rows acting on the right.

use serde::Serialize;

use crate::error::{RepError, Result};
use crate::field::{inv_mod, reduce};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GFpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl GFpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Entries are reduced mod `p`; panics unless `data.len() == rows * cols`.
    pub fn new(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count");
        Self { p, rows, cols, data: data.into_iter().map(|x| x % p).collect() }
    }

    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| reduce(x, p)));
        }
        Self { p, rows: rows.len(), cols, data }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: u64) {
        let k = i * self.cols + j;
        self.data[k] = (self.data[k] + v % self.p) % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "product shape");
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = (*d + a * b) % p;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![0u64; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(i)) {
                *o = (*o + a * b) % self.p;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % self.p).collect();
        Self { data, p: self.p, rows: self.rows, cols: self.cols }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.p - 1))
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let data = self.data.iter().map(|a| a * c % self.p).collect();
        Self { data, p: self.p, rows: self.rows, cols: self.cols }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Kronecker product; row `i * b.rows + k` pairs row `i` of `self` with row `k` of `b`.
    pub fn kron(&self, b: &Self) -> Self {
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Self::zeros(self.p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        out.data[(i * b.rows + k) * c + j * b.cols + l] = a * b.get(k, l) % self.p;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Columns side by side.
    pub fn hstack(parts: &[&Self]) -> Self {
        let first = parts.first().expect("empty hstack");
        let rows = first.rows;
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(first.p, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row count");
            for i in 0..rows {
                out.data[i * cols + off..i * cols + off + m.cols].copy_from_slice(m.row(i));
            }
            off += m.cols;
        }
        out
    }

    /// Rows stacked vertically.
    pub fn vstack(p: u64, cols: usize, parts: &[&Self]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column count");
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Self { p, rows, cols, data }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            for j in 0..m.cols {
                m.data.swap(piv * m.cols + j, r * m.cols + j);
            }
            let inv = inv_mod(m.get(r, c), p);
            for j in 0..m.cols {
                let k = r * m.cols + j;
                m.data[k] = m.data[k] * inv % p;
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let s = m.get(r, j);
                    let k = i * m.cols + j;
                    m.data[k] = (m.data[k] + (p - f) * s) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{ v : v · self = 0 }`.
    pub fn left_kernel(&self) -> Self {
        self.transpose().right_kernel_rows()
    }

    /// Basis (as rows) of `{ v : self · vᵀ = 0 }`.
    pub fn right_kernel_rows(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                out.set(k, pc, (self.p - v) % self.p);
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(RepError::Dimension(format!("{}x{} has no inverse", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = Self::hstack(&[self, &Self::identity(self.p, n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(RepError::Singular);
        }
        let mut out = Self::zeros(self.p, n, n);
        for i in 0..n {
            out.data[i * n..(i + 1) * n].copy_from_slice(&r.row(i)[n..]);
        }
        Ok(out)
    }

    /// Coordinates `c` with `c · basis = v`, when `v` lies in the row space.
    pub fn solve_in_rowspace(basis: &Self, v: &[u64]) -> Option<Vec<u64>> {
        let p = basis.p;
        let target = Self::new(p, 1, v.len(), v.to_vec());
        // Solve basisᵀ cᵀ = vᵀ via the augmented system.
        let aug = Self::hstack(&[&basis.transpose(), &target.transpose()]);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&basis.rows) {
            return None;
        }
        let mut c = vec![0u64; basis.rows];
        for (i, &pc) in pivots.iter().enumerate() {
            c[pc] = r.get(i, basis.rows);
        }
        Some(c)
    }

    /// Matrix of `v ↦ v · self` restricted to an invariant subspace with the given row basis.
    pub fn restrict(&self, basis: &Self) -> Result<Self> {
        let mut out = Self::zeros(self.p, basis.rows, basis.rows);
        for i in 0..basis.rows {
            let img = self.apply(basis.row(i));
            let c = Self::solve_in_rowspace(basis, &img)
                .ok_or_else(|| RepError::Dimension("subspace is not invariant".into()))?;
            out.data[i * basis.rows..(i + 1) * basis.rows].copy_from_slice(&c);
        }
        Ok(out)
    }

    pub fn determinant(&self) -> u64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let p = self.p;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m.get(i, c) != 0) else { return 0 };
            if piv != c {
                for j in 0..n {
                    m.data.swap(piv * n + j, c * n + j);
                }
                det = (p - det) % p;
            }
            let d = m.get(c, c);
            det = det * d % p;
            let inv = inv_mod(d, p);
            for i in c + 1..n {
                let f = m.get(i, c) * inv % p;
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let s = m.get(c, j);
                    let k = i * n + j;
                    m.data[k] = (m.data[k] + (p - f) * s) % p;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = GFpMatrix::from_rows(7, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.left_kernel();
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&m).is_zero());
        let rk = m.right_kernel_rows();
        assert_eq!(rk.rows(), 1);
        assert!(m.mul(&rk.transpose()).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = GFpMatrix::from_rows(11, &[vec![2, 3], vec![1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), GFpMatrix::identity(11, 2));
        assert_eq!(m.determinant(), 5);
        let s = GFpMatrix::from_rows(11, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.inverse(), Err(RepError::Singular));
        assert_eq!(s.determinant(), 0);
    }

    #[test]
    fn kron_mixed_product() {
        let a = GFpMatrix::from_rows(5, &[vec![1, 2], vec![3, 4]]);
        let b = GFpMatrix::from_rows(5, &[vec![0, 1, 2], vec![1, 1, 0], vec![4, 0, 3]]);
        let c = GFpMatrix::from_rows(5, &[vec![2, 0], vec![1, 1]]);
        let d = GFpMatrix::from_rows(5, &[vec![1, 0, 1], vec![0, 2, 0], vec![3, 0, 1]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn restriction_to_invariant_line() {
        let m = GFpMatrix::from_rows(7, &[vec![1, 0], vec![1, 1]]);
        let line = GFpMatrix::from_rows(7, &[vec![1, 0]]);
        assert_eq!(m.restrict(&line).unwrap(), GFpMatrix::identity(7, 1));
        assert!(m.restrict(&GFpMatrix::from_rows(7, &[vec![0, 1]])).is_err());
    }
}
