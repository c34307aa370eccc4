//! Maximal-class groups from semilinear monomial matrices.
//!
//! Elements are pairs `(A, k)` with `A` monomial over the Sylow `p`-subgroup of
//! `GF(r^{ap})^×` and `k` a power of the Frobenius `σ : x ↦ x^{r^a}`, multiplied
//! as `(A, k)(B, l) = (A · σ^k(B), k + l)`. The group returned is `T₁/Z(M)` with
//! `T₁ = T₀⟨diag(δ, 1, …, 1)σ⟩` and `T₀` the monomial matrices whose diagonal
//! product lies in the `p`-th powers.

use std::collections::{HashMap, VecDeque};

use mcf_groupkernel::io::PcFile;
use mcf_groupkernel::{is_prime, Caps, ElemSet, TableGroup};
use mcf_pgroup::battery::{maximal_class_battery, Check};
use mcf_pgroup::{pc_presentation, PGroup, Structure};
use serde::Serialize;

use crate::error::{ClassifyError, Result};

/// `GF(r^n)` as polynomials modulo a primitive monic polynomial.
///
/// Elements are encoded as base-`r` integers, constant term first.
#[derive(Clone, Debug)]
pub struct ExtField {
    pub r: u64,
    pub n: u32,
    /// Coefficients `c_0, …, c_{n−1}` of `x^n + c_{n−1}x^{n−1} + … + c_0`.
    pub modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl ExtField {
    fn order(r: u64, n: u32) -> u64 {
        r.pow(n)
    }

    /// Multiplication by `x` on an encoded element.
    fn times_x(r: u64, n: u32, modulus: &[u64], a: u64) -> u64 {
        let mut digits: Vec<u64> = (0..n).map(|i| a / r.pow(i) % r).collect();
        let top = digits[n as usize - 1];
        for i in (1..n as usize).rev() {
            digits[i] = digits[i - 1];
        }
        digits[0] = 0;
        for (i, d) in digits.iter_mut().enumerate() {
            *d = (*d + (r - top) * modulus[i]) % r;
        }
        digits.iter().enumerate().map(|(i, &d)| d * r.pow(i as u32)).sum()
    }

    /// The first primitive modulus in lexicographic order of
    /// `(c_{n−1}, …, c_0)`, so the class of `x` generates `GF(r^n)^×`.
    pub fn new(r: u64, n: u32) -> Result<Self> {
        if !is_prime(r) {
            return Err(ClassifyError::Precondition(format!("{r} is not prime")));
        }
        let q = Self::order(r, n);
        if q > 1 << 24 {
            return Err(ClassifyError::Precondition(format!("GF({r}^{n}) is too large to tabulate")));
        }
        for code in 0..r.pow(n) {
            // Digit n−1−i of `code` is c_i, so the leading coefficient varies slowest.
            let modulus: Vec<u64> = (0..n).map(|i| code / r.pow(n - 1 - i) % r).collect();
            if modulus[0] == 0 {
                continue;
            }
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut a = 1u64;
            let mut ok = true;
            for k in 0..q - 1 {
                if k > 0 && a == 1 {
                    ok = false;
                    break;
                }
                exp.push(a as u32);
                a = Self::times_x(r, n, &modulus, a);
            }
            if !ok || a != 1 {
                continue;
            }
            let mut log = vec![u32::MAX; q as usize];
            for (k, &e) in exp.iter().enumerate() {
                log[e as usize] = k as u32;
            }
            return Ok(ExtField { r, n, modulus, exp, log });
        }
        Err(ClassifyError::Precondition(format!("no primitive polynomial of degree {n} over GF({r})")))
    }

    pub fn size(&self) -> u64 {
        Self::order(self.r, self.n)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.exp.len() as u64;
        self.exp[((self.log[a as usize] as u64 + self.log[b as usize] as u64) % m) as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let m = self.exp.len() as u64;
        self.exp[((self.log[a as usize] as u64 * (k % m)) % m) as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        let m = self.exp.len() as u64;
        self.exp[((m - self.log[a as usize] as u64) % m) as usize]
    }

    /// `x^k` for the primitive class `x`.
    pub fn primitive_power(&self, k: u64) -> u32 {
        self.exp[(k % self.exp.len() as u64) as usize]
    }

    /// Discrete logarithm to base `x`.
    pub fn log(&self, a: u32) -> u32 {
        self.log[a as usize]
    }

    pub fn modulus_string(&self) -> String {
        let mut terms = vec![format!("x^{}", self.n)];
        for i in (0..self.n as usize).rev() {
            let c = self.modulus[i];
            if c == 0 {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 if c == 1 => "x".into(),
                1 => format!("{c}x"),
                _ if c == 1 => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            });
        }
        terms.join(" + ")
    }
}

/// `(A, k)` with `A[i][perm[i]] = diag[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Semilinear {
    diag: Vec<u32>,
    perm: Vec<u8>,
    frob: u8,
}

struct Arith<'a> {
    f: &'a ExtField,
    p: usize,
    /// `σ = x ↦ x^{r^a}`.
    sigma: u64,
}

impl Arith<'_> {
    fn frob_pow(&self, x: u32, k: u8) -> u32 {
        let mut y = x;
        for _ in 0..k {
            y = self.f.pow(y, self.sigma);
        }
        y
    }

    fn mul(&self, a: &Semilinear, b: &Semilinear) -> Semilinear {
        let p = self.p;
        let mut diag = vec![0u32; p];
        let mut perm = vec![0u8; p];
        for i in 0..p {
            let j = a.perm[i] as usize;
            diag[i] = self.f.mul(a.diag[i], self.frob_pow(b.diag[j], a.frob));
            perm[i] = b.perm[j];
        }
        Semilinear { diag, perm, frob: (a.frob + b.frob) % p as u8 }
    }

    /// Representative of the coset modulo scalar matrices: first diagonal entry `1`.
    fn canonical(&self, mut a: Semilinear) -> Semilinear {
        let c = self.f.inv(a.diag[0]);
        for d in &mut a.diag {
            *d = self.f.mul(*d, c);
        }
        a
    }

    fn identity(&self) -> Semilinear {
        Semilinear { diag: vec![1; self.p], perm: (0..self.p as u8).collect(), frob: 0 }
    }

    fn diag(&self, d: Vec<u32>) -> Semilinear {
        Semilinear { diag: d, perm: (0..self.p as u8).collect(), frob: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyCertificate {
    pub p: u64,
    pub r: u64,
    pub a: u32,
    pub field: String,
    pub modulus: String,
    /// `|T|`, the order of the Sylow `p`-subgroup of the field's unit group.
    pub torus_order: u64,
    /// `δ` as a power of the primitive class `x`.
    pub delta_log: u64,
    pub t0_order: usize,
    pub order: usize,
    pub log_order: u32,
    /// `|C(π̄)|` in the quotient; `p²` forces maximal class.
    pub pi_centralizer_order: usize,
    /// `|(C ∩ D)/Z(M)|` for `C` the centralizer of `π` modulo scalars.
    pub diagonal_centralizer_order: usize,
    pub maximal_class: bool,
    pub gamma1_order: Option<usize>,
    pub gamma1_abelian: Option<bool>,
    /// Whether `γ₁` equals `⟨D₀/Z(M), Z(M)·diag(δ, 1, …, 1)σ⟩`.
    pub gamma1_matches_generators: bool,
    pub battery: Vec<Check>,
    pub presentation: PcFile,
    /// False for `a > 1`, where the construction is experimental.
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct ExampleFamily {
    pub group: PGroup,
    pub certificate: FamilyCertificate,
}

/// Builds `T₁/Z(M)` for odd `p`, prime `r` and `p | r^a − 1`.
pub fn construct_example_family(p: u64, r: u64, a: u32, caps: &Caps) -> Result<ExampleFamily> {
    if p == 2 || !is_prime(p) {
        return Err(ClassifyError::Precondition(format!("p = {p} must be an odd prime")));
    }
    if !is_prime(r) {
        return Err(ClassifyError::Precondition(format!("r = {r} must be prime")));
    }
    if a == 0 || (r.pow(a) - 1) % p != 0 {
        return Err(ClassifyError::Precondition(format!("{p} does not divide {r}^{a} - 1")));
    }
    let field = ExtField::new(r, a * p as u32)?;
    let q1 = field.size() - 1;
    let mut torus_order = 1u64;
    while q1 % (torus_order * p) == 0 {
        torus_order *= p;
    }
    let delta_log = q1 / torus_order;
    let delta = field.primitive_power(delta_log);
    let ar = Arith { f: &field, p: p as usize, sigma: r.pow(a) };
    let pu = p as usize;

    // T₀ modulo scalars: π, diag(δ, δ⁻¹) shifts and diag(δ^p, 1, …, 1).
    let mut t0_gens = Vec::new();
    let mut pi = ar.identity();
    pi.perm = (0..pu).map(|i| ((i + 1) % pu) as u8).collect();
    t0_gens.push(pi.clone());
    for i in 0..pu - 1 {
        let mut d = vec![1u32; pu];
        d[i] = delta;
        d[i + 1] = field.inv(delta);
        t0_gens.push(ar.canonical(ar.diag(d)));
    }
    let mut d = vec![1u32; pu];
    d[0] = field.pow(delta, p);
    t0_gens.push(ar.canonical(ar.diag(d)));
    let mut twist = ar.diag({
        let mut d = vec![1u32; pu];
        d[0] = delta;
        d
    });
    twist.frob = 1;
    let twist = ar.canonical(twist);

    let enumerate = |gens: &[Semilinear]| -> Result<Vec<Semilinear>> {
        let id = ar.identity();
        let mut seen: HashMap<Semilinear, ()> = HashMap::from([(id.clone(), ())]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = ar.canonical(ar.mul(&x, g));
                if !seen.contains_key(&y) {
                    if order.len() >= caps.table {
                        return Err(mcf_groupkernel::GroupError::cap("example family", order.len() as u128 + 1, caps.table as u128).into());
                    }
                    seen.insert(y.clone(), ());
                    order.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(order)
    };
    let t0 = enumerate(&t0_gens)?;
    let mut gens = t0_gens.clone();
    gens.push(twist.clone());
    let elems = enumerate(&gens)?;
    let table = TableGroup::from_elements(&elems, &gens, |x, y| ar.canonical(ar.mul(x, y)))?;
    let label = |s: &Semilinear| {
        let logs: Vec<String> = s.diag.iter().map(|&d| ((field.log(d) as u64 / delta_log) % torus_order).to_string()).collect();
        let shift = s.perm[0];
        format!("d({})p{}s{}", logs.join(","), shift, s.frob)
    };
    let labels = elems.iter().map(label).collect();
    let group = PGroup::from_table(table, labels)?;
    let t = group.table();
    let index: HashMap<&Semilinear, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let pi_idx = index[&ar.canonical(pi.clone())];
    let full = group.full();
    let pi_set = t.closure(&[pi_idx]);
    let cpi = t.centralizer_in(&full, &pi_set);
    let diagonal_centralizer_order = cpi
        .ones()
        .filter(|&i| {
            let e = &elems[i];
            e.frob == 0 && e.perm.iter().enumerate().all(|(k, &j)| j as usize == k)
        })
        .count();

    let st = Structure::new(&group);
    let battery = if st.maximal_class && st.n >= 4 { maximal_class_battery(&group, caps)? } else { Vec::new() };
    let d0: Vec<u32> = t0
        .iter()
        .filter(|e| e.perm.iter().enumerate().all(|(k, &j)| j as usize == k))
        .map(|e| index[e])
        .collect();
    let mut g1_gens = d0;
    g1_gens.push(index[&twist]);
    let claimed: ElemSet = t.closure(&g1_gens);
    let gamma1 = st.gamma1.as_ref();
    let (presentation, _) = pc_presentation(&group, caps.pc_verify)?;
    let certificate = FamilyCertificate {
        p,
        r,
        a,
        field: format!("GF({r}^{})", a * p as u32),
        modulus: field.modulus_string(),
        torus_order,
        delta_log,
        t0_order: t0.len(),
        order: elems.len(),
        log_order: group.n(),
        pi_centralizer_order: TableGroup::order_of(&cpi),
        diagonal_centralizer_order,
        maximal_class: st.maximal_class,
        gamma1_order: gamma1.map(TableGroup::order_of),
        gamma1_abelian: gamma1.map(|g| t.is_abelian(g)),
        gamma1_matches_generators: gamma1 == Some(&claimed),
        battery,
        presentation,
        certified: a == 1,
    };
    Ok(ExampleFamily { group, certificate })
}

impl FamilyCertificate {
    /// Maximal class, non-abelian `γ₁`, and every battery check passes.
    pub fn holds(&self) -> bool {
        self.certified
            && self.maximal_class
            && self.gamma1_abelian == Some(false)
            && self.pi_centralizer_order as u64 == self.p * self.p
            && self.battery.iter().all(|c| c.pass)
            && !self.battery.is_empty()
    }
}
