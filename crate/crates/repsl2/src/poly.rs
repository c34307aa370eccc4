//! The modules `V_e` of homogeneous polynomials of degree `e` in `x, y`.
//!
//! Basis vector `j` is `x^{e−j} y^j`. A matrix `[[α, β], [γ, δ]]` sends
//! `x^a y^b` to `(αx + βy)^a (γx + δy)^b`; with row vectors this is a right action.

use std::fmt;

use serde::Serialize;

use crate::error::{RepError, Result};
use crate::field::{binom_mod, check_prime, inv_mod, pow_mod, primitive_root, reduce};
use crate::matrix::GFpMatrix;

/// A 2×2 matrix `[[α, β], [γ, δ]]` over `GF(p)`.
pub type Mat2 = [[u64; 2]; 2];

pub fn mat2(p: u64, m: [[i64; 2]; 2]) -> Mat2 {
    m.map(|r| r.map(|x| reduce(x, p)))
}

pub fn mat2_mul(p: u64, a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % p;
        }
    }
    out
}

pub fn mat2_det(p: u64, a: &Mat2) -> u64 {
    (a[0][0] * a[1][1] % p + p - a[0][1] * a[1][0] % p) % p
}

/// Coefficients of `(u x + v y)^a`, indexed by the power of `y`.
fn linear_power(p: u64, u: u64, v: u64, a: usize) -> Vec<u64> {
    (0..=a)
        .map(|s| binom_mod(a as u64, s as u64, p) * pow_mod(u, (a - s) as u64, p) % p * pow_mod(v, s as u64, p) % p)
        .collect()
}

/// The matrix of `g` on `V_e`.
pub fn action_matrix(p: u64, e: usize, g: &Mat2) -> GFpMatrix {
    let [[al, be], [ga, de]] = *g;
    let mut m = GFpMatrix::zeros(p, e + 1, e + 1);
    for j in 0..=e {
        let left = linear_power(p, al, be, e - j);
        let right = linear_power(p, ga, de, j);
        for (s, &l) in left.iter().enumerate() {
            if l == 0 {
                continue;
            }
            for (t, &r) in right.iter().enumerate() {
                m.add_to(j, s + t, l * r % p);
            }
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub matrix: Mat2,
    pub action: GFpMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyModule {
    pub p: u64,
    pub e: usize,
    pub generators: Vec<Generator>,
}

/// The standard unipotent `[[1, 1], [0, 1]]`.
pub fn unipotent(p: u64) -> Mat2 {
    mat2(p, [[1, 1], [0, 1]])
}

/// The Weyl element `[[0, −1], [1, 0]]`.
pub fn weyl(p: u64) -> Mat2 {
    mat2(p, [[0, -1], [1, 0]])
}

/// `diag(λ, λ⁻¹)` for the least primitive root `λ`; it has order `p − 1`.
pub fn torus(p: u64) -> Mat2 {
    let l = primitive_root(p);
    [[l, 0], [0, inv_mod(l, p)]]
}

pub fn build_ve(p: u64, e: usize) -> Result<PolyModule> {
    check_prime(p)?;
    let max = (p - 1) as usize;
    if e > max {
        return Err(RepError::DegreeOutOfRange { e, max });
    }
    let generators = [("unipotent", unipotent(p)), ("weyl", weyl(p)), ("torus", torus(p))]
        .into_iter()
        .map(|(name, matrix)| Generator { name: name.into(), matrix, action: action_matrix(p, e, &matrix) })
        .collect();
    Ok(PolyModule { p, e, generators })
}

impl PolyModule {
    pub fn dim(&self) -> usize {
        self.e + 1
    }

    pub fn act(&self, g: &Mat2) -> GFpMatrix {
        action_matrix(self.p, self.e, g)
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// Product of generator actions along a word of generator indices.
    pub fn word(&self, word: &[usize]) -> GFpMatrix {
        word.iter().fold(GFpMatrix::identity(self.p, self.dim()), |acc, &i| acc.mul(&self.generators[i].action))
    }

    /// Product of the underlying 2×2 matrices along the same word.
    pub fn word_matrix(&self, word: &[usize]) -> Mat2 {
        word.iter().fold([[1, 0], [0, 1]], |acc, &i| mat2_mul(self.p, &acc, &self.generators[i].matrix))
    }
}

/// A homogeneous form of fixed degree; `coeffs[j]` multiplies `x^{deg−j} y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Form {
    pub p: u64,
    pub degree: usize,
    pub coeffs: Vec<u64>,
}

impl Form {
    pub fn monomial(p: u64, a: usize, b: usize) -> Self {
        let mut coeffs = vec![0; a + b + 1];
        coeffs[b] = 1 % p;
        Self { p, degree: a + b, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Parses sums of terms such as `x4`, `3x^2y`, `x2y2 + 5y4`.
    pub fn parse(p: u64, s: &str) -> Result<Self> {
        let bad = |why: &str| RepError::Hypothesis(format!("cannot parse form {s:?}: {why}"));
        let mut terms: Vec<(u64, usize, usize)> = Vec::new();
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let compact = compact.replace('-', "+-");
        let compact = compact.strip_prefix('+').unwrap_or(&compact);
        for raw in compact.split('+') {
            if raw.is_empty() {
                return Err(bad("empty term"));
            }
            let (neg, body) = match raw.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, raw),
            };
            let digits: String = body.chars().take_while(char::is_ascii_digit).collect();
            let mut rest = &body[digits.len()..];
            let mut coef = if digits.is_empty() { 1 } else { digits.parse::<u64>().map_err(|_| bad("coefficient"))? % p };
            if neg {
                coef = (p - coef) % p;
            }
            let mut exps = [0usize; 2];
            let mut seen = [false; 2];
            while let Some(c) = rest.chars().next() {
                let v = match c {
                    'x' => 0,
                    'y' => 1,
                    _ => return Err(bad("unexpected character")),
                };
                if seen[v] {
                    return Err(bad("repeated variable"));
                }
                seen[v] = true;
                rest = &rest[1..];
                rest = rest.strip_prefix('^').unwrap_or(rest);
                let n: String = rest.chars().take_while(char::is_ascii_digit).collect();
                rest = &rest[n.len()..];
                exps[v] = if n.is_empty() { 1 } else { n.parse().map_err(|_| bad("exponent"))? };
            }
            if digits.is_empty() && !seen[0] && !seen[1] {
                return Err(bad("empty term"));
            }
            terms.push((coef, exps[0], exps[1]));
        }
        let degree = terms[0].1 + terms[0].2;
        if terms.iter().any(|t| t.1 + t.2 != degree) {
            return Err(bad("terms of different degree"));
        }
        let mut coeffs = vec![0u64; degree + 1];
        for (c, _, b) in terms {
            coeffs[b] = (coeffs[b] + c) % p;
        }
        Ok(Self { p, degree, coeffs })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let (a, b) = (self.degree - j, j);
            if c != 1 || (a == 0 && b == 0) {
                write!(f, "{c}")?;
            }
            for (v, n) in [('x', a), ('y', b)] {
                match n {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{n}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_modules() {
        let v0 = build_ve(7, 0).unwrap();
        assert_eq!(v0.dim(), 1);
        assert!(v0.generators.iter().all(|g| g.action == GFpMatrix::identity(7, 1)));
        let v1 = build_ve(7, 1).unwrap();
        // On V_1 the action matrix is the 2×2 matrix itself.
        for g in &v1.generators {
            let direct = GFpMatrix::new(7, 2, 2, g.matrix.iter().flatten().copied().collect());
            assert_eq!(g.action, direct);
        }
        assert_eq!(build_ve(7, 6).unwrap().dim(), 7);
        assert_eq!(build_ve(7, 7), Err(RepError::DegreeOutOfRange { e: 7, max: 6 }));
        assert!(build_ve(8, 1).is_err());
    }

    #[test]
    fn unipotent_on_v2_by_hand() {
        // x² ↦ (x+y)², xy ↦ (x+y)y, y² ↦ y².
        let m = action_matrix(5, 2, &unipotent(5));
        assert_eq!(m, GFpMatrix::from_rows(5, &[vec![1, 2, 1], vec![0, 1, 1], vec![0, 0, 1]]));
    }

    #[test]
    fn parse_and_print() {
        let f = Form::parse(7, "x4").unwrap();
        assert_eq!(f, Form::monomial(7, 4, 0));
        let g = Form::parse(7, "3x^2y + y3 - x3").unwrap();
        assert_eq!(g.coeffs, vec![6, 3, 0, 1]);
        assert_eq!(g.to_string(), "6x^3 + 3x^2y + y^3");
        assert_eq!(Form::parse(7, "5").unwrap().to_string(), "5");
        assert!(Form::parse(7, "x2 + y").is_err());
        assert!(Form::parse(7, "xz").is_err());
    }
}
