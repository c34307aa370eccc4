//! Arithmetic in `GF(p)` and binomial coefficients modulo `p`.

use crate::error::{RepError, Result};

/// Accepts odd primes below `2^31`, so products fit in `u64`.
pub fn check_prime(p: u64) -> Result<()> {
    let prime = p >= 3 && p < (1 << 31) && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if prime {
        Ok(())
    } else {
        Err(RepError::InvalidPrime(p))
    }
}

pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Least generator of `GF(p)^×`.
pub fn primitive_root(p: u64) -> u64 {
    let mut m = p - 1;
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// `C(n, k)` for `n, k < p`, by the multiplicative formula.
fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * inv_mod(den, p) % p
}

/// `C(n, k) mod p` by Lucas' theorem: the product of digit binomials in base `p`.
pub fn binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        r = r * small_binom(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    r
}

/// `n (n−1) ⋯ (n−r+1) mod p`.
pub fn falling_mod(n: u64, r: u64, p: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n.wrapping_sub(i) % p) % p)
}
