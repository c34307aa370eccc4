use std::fmt;

use crate::error::{GroupError, Result};

/// A permutation of `0..n` acting on the right: `i * (g h) = (i g) h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn new(img: Vec<u32>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(GroupError::NotABijection(n));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n as u32).collect() }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let a = a as usize;
                if a >= n || touched[a] {
                    return Err(GroupError::NotABijection(n));
                }
                touched[a] = true;
                img[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Perm::new(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn image(&self, i: u32) -> u32 {
        self.img[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { img: self.img.iter().map(|&i| other.img[i as usize]).collect() }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j as usize] = i as u32;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.img.iter().enumerate().find(|(i, &j)| *i as u32 != j).map(|(i, _)| i as u32)
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start as u32];
            seen[start] = true;
            let mut j = self.img[start] as usize;
            while j != start {
                seen[j] = true;
                cyc.push(j as u32);
                j = self.img[j] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_product() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn cycle_display() {
        let a = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        assert_eq!(a.to_string(), "(0 2)(1 3)");
        assert_eq!(Perm::identity(4).to_string(), "()");
    }

    #[test]
    fn inverse_and_power() {
        let c = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(c.mul(&c.inv()).is_identity());
        assert!(c.pow(5).is_identity());
        assert_eq!(c.pow(2).cycles(), vec![vec![0, 2, 4, 1, 3]]);
    }
}
