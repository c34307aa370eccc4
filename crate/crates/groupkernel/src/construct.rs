//! Standard permutation groups and power-commutator presentations.

use crate::error::{GroupError, Result};
use crate::group::is_prime;
use crate::pc::PcGroup;
use crate::perm::Perm;
use crate::permgroup::PermGroup;

const VERIFY_CAP: u128 = 1_000_000;

fn need_prime(q: u64) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(GroupError::Precondition(format!("{q} is not prime")))
    }
}

fn inv_mod(a: u64, q: u64) -> u64 {
    let mut r = 1;
    let mut b = a % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

/// Least primitive root modulo the prime `q`.
pub fn primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    let fac = crate::group::prime_divisors((q - 1) as u128);
    (2..q)
        .find(|&w| {
            fac.iter().all(|&f| {
                let mut r = 1;
                for _ in 0..(q - 1) / f {
                    r = r * w % q;
                }
                r != 1
            })
        })
        .expect("primitive root exists")
}

fn perm_of(n: usize, f: impl Fn(u32) -> u32) -> Result<Perm> {
    Perm::new((0..n as u32).map(f).collect())
}

/// The symmetric group on `0..n`.
pub fn sym(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return PermGroup::new(n.max(1), vec![]);
    }
    let t = Perm::from_cycles(n, &[&[0, 1]])?;
    let c = perm_of(n, |i| (i + 1) % n as u32)?;
    PermGroup::new(n, vec![t, c])
}

/// The alternating group on `0..n`.
pub fn alt(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return PermGroup::new(n.max(1), vec![]);
    }
    let t = Perm::from_cycles(n, &[&[0, 1, 2]])?;
    let c = if n % 2 == 1 {
        perm_of(n, |i| (i + 1) % n as u32)?
    } else {
        // (1 2 … n−1) is an even permutation when n is even.
        perm_of(n, |i| if i == 0 { 0 } else { i % (n as u32 - 1) + 1 })?
    };
    PermGroup::new(n, vec![t, c])
}

/// Projective line over `F_q`: points `0..q` with `q` as infinity.
fn line_perm(q: u64, f: impl Fn(Option<u64>) -> Option<u64>) -> Result<Perm> {
    perm_of(q as usize + 1, |i| {
        let x = if i as u64 == q { None } else { Some(i as u64) };
        match f(x) {
            None => q as u32,
            Some(y) => y as u32,
        }
    })
}

fn psl2_gens(q: u64) -> Result<Vec<Perm>> {
    need_prime(q)?;
    let t = line_perm(q, |x| x.map(|x| (x + 1) % q))?;
    let w = line_perm(q, |x| match x {
        None => Some(0),
        Some(0) => None,
        Some(x) => Some((q - inv_mod(x, q)) % q),
    })?;
    Ok(vec![t, w])
}

/// `PSL_2(q)` on the projective line, `q` prime.
pub fn psl2(q: u64) -> Result<PermGroup> {
    PermGroup::new(q as usize + 1, psl2_gens(q)?)
}

/// `PGL_2(q)` on the projective line, `q` prime.
pub fn pgl2(q: u64) -> Result<PermGroup> {
    let mut gens = psl2_gens(q)?;
    let w = primitive_root(q);
    gens.push(line_perm(q, |x| x.map(|x| x * w % q))?);
    PermGroup::new(q as usize + 1, gens)
}

type Mat = Vec<Vec<u64>>;

/// Right action `v ↦ vM` on the nonzero vectors of `F_q^d`.
fn vector_perm(q: u64, d: usize, m: &Mat) -> Result<Perm> {
    let count = (q as usize).pow(d as u32);
    let decode = |mut i: usize| -> Vec<u64> {
        let mut v = vec![0; d];
        for k in (0..d).rev() {
            v[k] = (i % q as usize) as u64;
            i /= q as usize;
        }
        v
    };
    let encode = |v: &[u64]| -> usize { v.iter().fold(0, |a, &x| a * q as usize + x as usize) };
    perm_of(count - 1, |i| {
        let v = decode(i as usize + 1);
        let w: Vec<u64> = (0..d).map(|c| (0..d).map(|r| v[r] * m[r][c]).sum::<u64>() % q).collect();
        (encode(&w) - 1) as u32
    })
}

fn elementary(d: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![0; d]; d];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = 1;
    }
    m[i][j] = 1;
    m
}

/// `SL_2(q)` on the nonzero vectors of `F_q^2`.
pub fn sl2(q: u64) -> Result<PermGroup> {
    need_prime(q)?;
    let gens = vec![vector_perm(q, 2, &elementary(2, 0, 1))?, vector_perm(q, 2, &elementary(2, 1, 0))?];
    PermGroup::new((q * q - 1) as usize, gens)
}

/// `GL_2(q)` on the nonzero vectors of `F_q^2`.
pub fn gl2(q: u64) -> Result<PermGroup> {
    need_prime(q)?;
    let w = primitive_root(q);
    let gens = vec![
        vector_perm(q, 2, &elementary(2, 0, 1))?,
        vector_perm(q, 2, &elementary(2, 1, 0))?,
        vector_perm(q, 2, &vec![vec![w, 0], vec![0, 1]])?,
    ];
    PermGroup::new((q * q - 1) as usize, gens)
}

/// `PSL_3(3)` on the 13 points of the projective plane over `F_3`.
pub fn psl3_3() -> Result<PermGroup> {
    let q = 3u64;
    let mut points: Vec<Vec<u64>> = Vec::new();
    for i in 1..27u64 {
        let v = vec![i / 9, (i / 3) % 3, i % 3];
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            points.push(v);
        }
    }
    let normalize = |v: Vec<u64>| -> Vec<u64> {
        let lead = *v.iter().find(|&&x| x != 0).expect("nonzero");
        let s = inv_mod(lead, q);
        v.into_iter().map(|x| x * s % q).collect()
    };
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let m = elementary(3, i, j);
                let p = perm_of(points.len(), |k| {
                    let v = &points[k as usize];
                    let w: Vec<u64> = (0..3).map(|c| (0..3).map(|r| v[r] * m[r][c]).sum::<u64>() % q).collect();
                    let w = normalize(w);
                    points.iter().position(|x| *x == w).expect("point") as u32
                })?;
                gens.push(p);
            }
        }
    }
    PermGroup::new(points.len(), gens)
}

/// `C_p ≀ C_p` on `p²` points.
pub fn wreath_perm(p: u64) -> Result<PermGroup> {
    need_prime(p)?;
    let n = (p * p) as usize;
    let p32 = p as u32;
    let mut gens = Vec::new();
    for b in 0..p32 {
        gens.push(perm_of(n, |i| if i / p32 == b { b * p32 + (i % p32 + 1) % p32 } else { i })?);
    }
    gens.push(perm_of(n, |i| ((i / p32 + 1) % p32) * p32 + i % p32)?);
    PermGroup::new(n, gens)
}

fn unit(n: usize, k: usize) -> Vec<u8> {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

/// 2-groups of order `2^k` with a cyclic subgroup `⟨r⟩` of index two.
///
/// Generators are `s, r, r², …, r^{2^{k−2}}`; `r^s = r^e` and `s² = r^{nfull/2}` when
/// `s_sq` holds.
fn index_two_cyclic(k: usize, e: u64, s_sq: bool) -> Result<PcGroup> {
    if k < 3 {
        return Err(GroupError::Precondition("order must be at least 8".into()));
    }
    let big = 1u64 << (k - 1);
    let rpow = |m: u64| -> Vec<u8> {
        let m = m % big;
        let mut v = vec![0u8; k];
        for t in 0..k - 1 {
            v[1 + t] = ((m >> t) & 1) as u8;
        }
        v
    };
    let mut powers = Vec::new();
    if s_sq {
        powers.push((0, rpow(big / 2)));
    }
    for j in 1..k - 1 {
        powers.push((j, unit(k, j + 1)));
    }
    let mut comms = Vec::new();
    for j in 1..k {
        let a = 1u64 << (j - 1);
        // [r^a, s] = r^{-a} r^{a e}.
        let c = rpow((big - a % big + a * e % big) % big);
        comms.push(((j, 0), c));
    }
    PcGroup::new(2, k, powers, comms, VERIFY_CAP)
}

/// Dihedral group of order `2^k`.
pub fn dihedral_pc(k: usize) -> Result<PcGroup> {
    index_two_cyclic(k, (1u64 << (k - 1)) - 1, false)
}

/// Semidihedral group of order `2^k`, `k ≥ 4`.
pub fn semidihedral_pc(k: usize) -> Result<PcGroup> {
    if k < 4 {
        return Err(GroupError::Precondition("semidihedral groups have order at least 16".into()));
    }
    index_two_cyclic(k, (1u64 << (k - 2)) - 1, false)
}

/// Generalized quaternion group of order `2^k`.
pub fn quaternion_pc(k: usize) -> Result<PcGroup> {
    index_two_cyclic(k, (1u64 << (k - 1)) - 1, true)
}

/// `C_p` acting on `F_p^d` by a single Jordan block, order `p^{d+1}`, `d ≤ p`.
///
/// `g1` is the acting element and `[g_{j}, g1] = g_{j+1}` on the module.
pub fn jordan_pc(p: u32, d: usize) -> Result<PcGroup> {
    need_prime(p as u64)?;
    if d == 0 || d > p as usize {
        return Err(GroupError::Precondition(format!("block size {d} must lie in 1..={p}")));
    }
    let n = d + 1;
    let comms = (1..d).map(|j| ((j, 0), unit(n, j + 1))).collect();
    PcGroup::new(p, n, vec![], comms, VERIFY_CAP)
}

/// `C_p ≀ C_p` as a power-commutator presentation.
pub fn wreath_pc(p: u32) -> Result<PcGroup> {
    jordan_pc(p, p as usize)
}

/// Extraspecial group of order `p³` and exponent `p` (odd `p`).
pub fn extraspecial_pc(p: u32) -> Result<PcGroup> {
    jordan_pc(p, 2)
}

/// Elementary abelian group of order `p^n`.
pub fn elementary_abelian_pc(p: u32, n: usize) -> Result<PcGroup> {
    PcGroup::new(p, n, vec![], vec![], VERIFY_CAP)
}

/// Cyclic group of order `p^n`.
pub fn cyclic_pc(p: u32, n: usize) -> Result<PcGroup> {
    let powers = (0..n.saturating_sub(1)).map(|i| (i, unit(n, i + 1))).collect();
    PcGroup::new(p, n, powers, vec![], VERIFY_CAP)
}
