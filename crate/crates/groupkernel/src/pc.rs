use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

/// How the consistency of a presentation was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Consistency {
    /// Every element was enumerated and the relations checked.
    Verified,
    /// The group was too large to enumerate; relations are trusted.
    Trusted,
}

/// A p-group given by a power-commutator presentation on `g_1..g_n`.
///
/// Generators are stored 0-based. `powers[i]` is the normal form of `g_i^p`
/// and `comms[j][i]` (`i < j`) the normal form of `[g_j, g_i]`; both are
/// supported on indices greater than `i` and `j` respectively.
#[derive(Clone, Debug)]
pub struct PcGroup {
    p: u32,
    n: usize,
    powers: Vec<Vec<u8>>,
    comms: Vec<Vec<Vec<u8>>>,
    /// `conj[j][i]` is the normal form of `g_j^{g_i}` for `i < j`.
    conj: Vec<Vec<Vec<u8>>>,
    consistency: Consistency,
}

impl PcGroup {
    /// Builds and checks a presentation. Missing relations are trivial.
    pub fn new(
        p: u32,
        n: usize,
        powers: Vec<(usize, Vec<u8>)>,
        comms: Vec<((usize, usize), Vec<u8>)>,
        verify_cap: u128,
    ) -> Result<Self> {
        if !crate::group::is_prime(p as u64) {
            return Err(GroupError::InvalidPresentation(format!("{p} is not prime")));
        }
        if p > 255 {
            return Err(GroupError::InvalidPresentation("prime too large for u8 exponents".into()));
        }
        let zero = vec![0u8; n];
        let mut pw = vec![zero.clone(); n];
        let mut cm = vec![vec![zero.clone(); n]; n];
        let check = |v: &Vec<u8>, after: usize, what: &str| -> Result<()> {
            if v.len() != n {
                return Err(GroupError::InvalidPresentation(format!(
                    "{what}: vector has length {} but ngens is {n}",
                    v.len()
                )));
            }
            for (k, &e) in v.iter().enumerate() {
                if e as u32 >= p {
                    return Err(GroupError::InvalidPresentation(format!(
                        "{what}: exponent {e} not reduced mod {p}"
                    )));
                }
                if k <= after && e != 0 {
                    return Err(GroupError::InvalidPresentation(format!(
                        "{what}: word must involve only later generators"
                    )));
                }
            }
            Ok(())
        };
        for (i, v) in powers {
            if i >= n {
                return Err(GroupError::InvalidPresentation(format!("power index {} out of range", i + 1)));
            }
            check(&v, i, &format!("power of g{}", i + 1))?;
            pw[i] = v;
        }
        for ((j, i), v) in comms {
            if j >= n || i >= j {
                return Err(GroupError::InvalidPresentation(format!(
                    "commutator key {},{} must satisfy j > i",
                    j + 1,
                    i + 1
                )));
            }
            check(&v, j, &format!("commutator [g{},g{}]", j + 1, i + 1))?;
            cm[j][i] = v;
        }
        let mut conj = vec![vec![zero.clone(); n]; n];
        for j in 0..n {
            for i in 0..j {
                let mut v = cm[j][i].clone();
                v[j] = 1;
                conj[j][i] = v;
            }
        }
        let mut g = PcGroup { p, n, powers: pw, comms: cm, conj, consistency: Consistency::Trusted };
        let order = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if order <= verify_cap {
            g.verify()?;
            g.consistency = Consistency::Verified;
        }
        Ok(g)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn ngens(&self) -> usize {
        self.n
    }

    pub fn consistency(&self) -> Consistency {
        self.consistency
    }

    pub fn power_relation(&self, i: usize) -> &[u8] {
        &self.powers[i]
    }

    pub fn commutator_relation(&self, j: usize, i: usize) -> &[u8] {
        &self.comms[j][i]
    }

    pub fn gen(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.n];
        v[i] = 1;
        v
    }

    /// `v ← v · g_k`.
    fn mul_gen(&self, v: &mut [u8], k: usize) {
        let tail: Vec<u8> = v[k + 1..].to_vec();
        for x in v[k + 1..].iter_mut() {
            *x = 0;
        }
        v[k] += 1;
        if v[k] as u32 == self.p {
            v[k] = 0;
            v[k + 1..].copy_from_slice(&self.powers[k][k + 1..]);
        }
        for (off, &e) in tail.iter().enumerate() {
            let j = k + 1 + off;
            for _ in 0..e {
                self.mul_word(v, &self.conj[j][k]);
            }
        }
    }

    fn mul_word(&self, v: &mut [u8], w: &[u8]) {
        for (l, &e) in w.iter().enumerate() {
            for _ in 0..e {
                self.mul_gen(v, l);
            }
        }
    }

    /// Collects a word of `(generator, exponent)` letters into normal form.
    /// Exponents may be negative.
    pub fn collect(&self, word: &[(usize, i64)]) -> Result<Vec<u8>> {
        let mut v = vec![0u8; self.n];
        for &(g, e) in word {
            if g >= self.n {
                return Err(GroupError::InvalidPresentation(format!("generator g{} out of range", g + 1)));
            }
            let letter = if e >= 0 { self.gen(g) } else { self.inv(&self.gen(g)) };
            for _ in 0..e.unsigned_abs() {
                self.mul_word(&mut v, &letter);
            }
        }
        Ok(v)
    }

    fn verify(&self) -> Result<()> {
        let size = (self.p as usize).pow(self.n as u32);
        let index = |v: &[u8]| -> usize { v.iter().fold(0usize, |acc, &e| acc * self.p as usize + e as usize) };
        let mut vecs = Vec::with_capacity(size);
        for idx in 0..size {
            let mut v = vec![0u8; self.n];
            let mut r = idx;
            for k in (0..self.n).rev() {
                v[k] = (r % self.p as usize) as u8;
                r /= self.p as usize;
            }
            vecs.push(v);
        }
        let mut rho: Vec<Vec<u32>> = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mut perm = vec![0u32; size];
            let mut seen = vec![false; size];
            for (idx, v) in vecs.iter().enumerate() {
                let mut w = v.clone();
                self.mul_gen(&mut w, k);
                let t = index(&w);
                if seen[t] {
                    return Err(GroupError::Inconsistent(format!(
                        "right multiplication by g{} is not a bijection",
                        k + 1
                    )));
                }
                seen[t] = true;
                perm[idx] = t as u32;
            }
            rho.push(perm);
        }
        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().map(|&x| b[x as usize]).collect() };
        let id: Vec<u32> = (0..size as u32).collect();
        let word_perm = |w: &[u8]| -> Vec<u32> {
            let mut acc = id.clone();
            for (l, &e) in w.iter().enumerate() {
                for _ in 0..e {
                    acc = compose(&acc, &rho[l]);
                }
            }
            acc
        };
        let inverse = |a: &[u32]| -> Vec<u32> {
            let mut out = vec![0u32; a.len()];
            for (i, &j) in a.iter().enumerate() {
                out[j as usize] = i as u32;
            }
            out
        };
        for k in 0..self.n {
            let mut pk = id.clone();
            for _ in 0..self.p {
                pk = compose(&pk, &rho[k]);
            }
            if pk != word_perm(&self.powers[k]) {
                return Err(GroupError::Inconsistent(format!("power relation of g{} fails", k + 1)));
            }
        }
        for j in 0..self.n {
            for i in 0..j {
                let gj = &rho[j];
                let gi = &rho[i];
                let c = compose(&compose(&compose(&inverse(gj), &inverse(gi)), gj), gi);
                if c != word_perm(&self.comms[j][i]) {
                    return Err(GroupError::Inconsistent(format!(
                        "commutator relation [g{},g{}] fails",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Elements in lexicographic order of exponent vectors.
    fn visit_rec(&self, v: &mut Vec<u8>, k: usize, f: &mut dyn FnMut(&Vec<u8>) -> bool) -> bool {
        if k == self.n {
            return f(v);
        }
        for e in 0..self.p {
            v[k] = e as u8;
            if !self.visit_rec(v, k + 1, f) {
                return false;
            }
        }
        v[k] = 0;
        true
    }
}

impl FiniteGroup for PcGroup {
    type Elem = Vec<u8>;

    fn identity(&self) -> Vec<u8> {
        vec![0u8; self.n]
    }

    fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        let mut v = a.clone();
        self.mul_word(&mut v, b);
        v
    }

    fn inv(&self, a: &Vec<u8>) -> Vec<u8> {
        let mut w = a.clone();
        let mut u = vec![0u8; self.n];
        while let Some(k) = w.iter().position(|&e| e != 0) {
            let m = self.p as u8 - w[k];
            for _ in 0..m {
                self.mul_gen(&mut w, k);
                self.mul_gen(&mut u, k);
            }
        }
        u
    }

    fn generators(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| self.gen(i)).collect()
    }

    fn order(&self) -> u128 {
        (self.p as u128).pow(self.n as u32)
    }

    fn contains(&self, a: &Vec<u8>) -> bool {
        a.len() == self.n && a.iter().all(|&e| (e as u32) < self.p)
    }

    fn visit_elements(&self, f: &mut dyn FnMut(&Vec<u8>) -> bool) {
        let mut v = vec![0u8; self.n];
        self.visit_rec(&mut v, 0, f);
    }
}
