use mcf_groupkernel::{ElemSet, TableGroup};
use mcf_pgroup::Structure;
use serde::Serialize;

use crate::auto::Auto;
use crate::error::{AutError, Result};
use crate::mu::exponent_mod;

fn pow_mod(a: u64, e: u64, p: u64) -> u64 {
    let mut r = 1;
    for _ in 0..e {
        r = r * a % p;
    }
    r
}

/// Exponents of an automorphism along the chain `s_1, …, s_{n−1}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ActionExponents {
    pub a: u64,
    pub b: u64,
    /// `measured[i-1]` is `e_i` with `s_iφ ≡ s_i^{e_i} mod γ_{i+1}(S)`.
    pub measured: Vec<u64>,
    pub predicted: Vec<u64>,
    pub exceptional_tail: bool,
    pub complement_is_cz2: bool,
    pub x: u32,
    pub s1: u32,
}

impl ActionExponents {
    /// First level where measurement and prediction differ.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.measured.iter().zip(&self.predicted).position(|(m, q)| m != q).map(|i| i + 1)
    }
}

/// First `⟨y⟩γ₂(S) ≠ γ₁(S)` left invariant by `φ`; `C_S(Z₂(S))` when `S` is
/// exceptional.
fn invariant_complement(st: &Structure, t: &TableGroup, phi: &Auto) -> Option<ElemSet> {
    let g1 = st.gamma(1);
    if st.is_exceptional() {
        return st.cz2.clone();
    }
    let g2 = st.gamma(2);
    let mut tried: Vec<ElemSet> = Vec::new();
    for y in 0..t.size() as u32 {
        if g1.contains(y as usize) {
            continue;
        }
        if tried.iter().any(|m| m.contains(y as usize)) {
            continue;
        }
        let m = t.extend(&g2, &[y]);
        if m.contains(phi.apply(y) as usize) {
            return Some(m);
        }
        tried.push(m);
    }
    None
}

/// The chain `s_1, …, s_{n−1}` for a given complement `M` with `x ∈ M \ γ₁`.
pub fn chain(st: &Structure, t: &TableGroup, m: &ElemSet) -> Result<(u32, Vec<u32>)> {
    let n = st.n as usize;
    let g1 = st.gamma(1);
    let g2 = st.gamma(2);
    let outside: Vec<u32> = m.ones().map(|x| x as u32).filter(|&x| !g1.contains(x as usize)).collect();
    let x = outside
        .iter()
        .copied()
        .find(|&x| t.elem_order_of(x) as u64 == st.p)
        .or_else(|| outside.first().copied())
        .ok_or(AutError::NoInvariantComplement)?;
    let s1 = g1.ones().map(|s| s as u32).find(|&s| !g2.contains(s as usize)).expect("γ₁ > γ₂");
    let mut s = vec![s1];
    for _ in 2..=n - 2 {
        let prev = *s.last().expect("nonempty");
        s.push(t.comm(x, prev));
    }
    let last = *s.last().expect("nonempty");
    let tail = if st.cz2.as_ref() == Some(m) { t.comm(s1, last) } else { t.comm(x, last) };
    s.push(tail);
    for (i, &si) in s.iter().enumerate() {
        let level = i as u32 + 1;
        if !st.gamma(level).contains(si as usize) || st.gamma(level + 1).contains(si as usize) {
            return Err(AutError::DegenerateChain(i + 1));
        }
    }
    Ok((x, s))
}

/// Measures `a`, `b` and every `e_i` for a p′-order automorphism without
/// comparing them to the prediction.
pub fn measure(st: &Structure, t: &TableGroup, phi: &Auto) -> Result<ActionExponents> {
    if st.gamma1.is_none() {
        return Err(AutError::NotMaximalClass);
    }
    let p = st.p;
    if phi.order() % p == 0 {
        return Err(AutError::NotPPrime);
    }
    let m = invariant_complement(st, t, phi).ok_or(AutError::NoInvariantComplement)?;
    let (x, s) = chain(st, t, &m)?;
    let g2 = st.gamma(2);
    let a = exponent_mod(t, x, phi.apply(x), &g2, p).ok_or(AutError::NoInvariantComplement)?;
    let b = exponent_mod(t, s[0], phi.apply(s[0]), &g2, p).ok_or(AutError::DegenerateChain(1))?;
    let mut measured = Vec::with_capacity(s.len());
    for (i, &si) in s.iter().enumerate() {
        let level = i as u32 + 1;
        let e = exponent_mod(t, si, phi.apply(si), &st.gamma(level + 1), p).ok_or(AutError::DegenerateChain(i + 1))?;
        measured.push(e);
    }
    let n = st.n as u64;
    let exceptional = st.is_exceptional();
    let mut predicted: Vec<u64> = (1..=n - 2).map(|i| pow_mod(a, i - 1, p) * b % p).collect();
    predicted.push(if exceptional { pow_mod(a, n - 3, p) * b % p * b % p } else { pow_mod(a, n - 2, p) * b % p });
    Ok(ActionExponents {
        a,
        b,
        measured,
        predicted,
        exceptional_tail: exceptional,
        complement_is_cz2: st.cz2.as_ref() == Some(&m),
        x,
        s1: s[0],
    })
}

/// Measures and verifies the action exponents of a p′-order automorphism.
pub fn action_exponents(st: &Structure, t: &TableGroup, phi: &Auto) -> Result<ActionExponents> {
    let ex = measure(st, t, phi)?;
    if let Some(level) = ex.first_mismatch() {
        return Err(AutError::Mismatch {
            level,
            measured: ex.measured[level - 1],
            predicted: ex.predicted[level - 1],
        });
    }
    Ok(ex)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CongruenceReport {
    /// Order of the action on `S/γ₁(S)`.
    pub m: u64,
    /// Scalar at each level `1..n−1`.
    pub scalars: Vec<u64>,
    /// Level pairs `(j, k)` with equal scalars but `j ≢ k mod m`.
    pub violations: Vec<(usize, usize)>,
}

fn mult_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// Levels sharing a scalar must be congruent modulo the order of the action
/// on `S/γ₁(S)`. Scalars are measured on the p′-part of `α`.
pub fn verify_centralizer_congruence(st: &Structure, t: &TableGroup, alpha: &Auto) -> Result<CongruenceReport> {
    if st.gamma1.is_none() {
        return Err(AutError::NotMaximalClass);
    }
    if st.is_exceptional() {
        return Err(AutError::Precondition("S is exceptional".into()));
    }
    let q = alpha.p_prime_part(st.p);
    let r = crate::mu::mu(st, t, &q)?.r;
    let m = mult_order(r, st.p);
    if m == 1 {
        return Err(AutError::Precondition("action on S/γ₁(S) is trivial".into()));
    }
    let ex = measure(st, t, &q)?;
    let mut violations = Vec::new();
    for j in 0..ex.measured.len() {
        for k in j + 1..ex.measured.len() {
            if ex.measured[j] == ex.measured[k] && (k - j) as u64 % m != 0 {
                violations.push((j + 1, k + 1));
            }
        }
    }
    Ok(CongruenceReport { m, scalars: ex.measured, violations })
}
