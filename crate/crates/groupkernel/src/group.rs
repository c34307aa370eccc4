use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{GroupError, Result};

/// Element-level interface shared by every backend.
///
/// Products are read left to right: `mul(a, b)` applies `a` first.
/// Conjugation is `a^g = g⁻¹ a g` and commutators are `[a,b] = a⁻¹ b⁻¹ a b`.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn generators(&self) -> Vec<Self::Elem>;
    fn order(&self) -> u128;
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Visits every element once in a fixed order; the visitor returns
    /// `false` to stop early.
    fn visit_elements(&self, f: &mut dyn FnMut(&Self::Elem) -> bool);

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    fn conj(&self, a: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(g), a), g)
    }

    fn comm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut acc = self.identity();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn elem_order(&self, a: &Self::Elem) -> u64 {
        let id = self.identity();
        let mut x = a.clone();
        let mut k = 1;
        while x != id {
            x = self.mul(&x, a);
            k += 1;
        }
        k
    }

    /// All elements in visiting order, refusing groups above `cap`.
    fn elements(&self, cap: u128) -> Result<Vec<Self::Elem>> {
        let ord = self.order();
        if ord > cap {
            return Err(GroupError::cap("element enumeration", ord, cap));
        }
        let mut out = Vec::with_capacity(ord as usize);
        self.visit_elements(&mut |x| {
            out.push(x.clone());
            true
        });
        Ok(out)
    }
}

/// Exponent of `p` in `n`.
pub fn p_valuation(mut n: u128, p: u64) -> u32 {
    let p = p as u128;
    let mut k = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Returns `Some(k)` when `n = p^k`.
pub fn p_log(n: u128, p: u64) -> Option<u32> {
    let k = p_valuation(n, p);
    if (p as u128).pow(k) == n {
        Some(k)
    } else {
        None
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}
