//! The appendix tables as data, with pure lookups.
//!
//! Cells are stored as transcribed display strings; the `*_spec` fields carry
//! the machine-readable constraints that lookups evaluate at a concrete prime.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::delta::{self, DeltaSet, DeltaSubgroup};
use crate::error::{ClassifyError, Result};

const TABLE1: &str = include_str!("../data/table1.json");
const TABLE21: &str = include_str!("../data/table21.json");
const TABLE3: &str = include_str!("../data/table3.json");

/// Evaluates `p`, `e`, integers and `var ± int`.
fn eval(expr: &str, p: u64, e: Option<i64>) -> Result<i64> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || ClassifyError::Data(format!("cannot evaluate {expr:?}"));
    if let Ok(n) = s.parse::<i64>() {
        return Ok(n);
    }
    let (var, rest) = s.split_at(1);
    let base = match var {
        "p" => p as i64,
        "e" => e.ok_or_else(bad)?,
        _ => return Err(bad()),
    };
    if rest.is_empty() {
        return Ok(base);
    }
    let off: i64 = rest.parse().map_err(|_| bad())?;
    Ok(base + off)
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}' | '\\' | '$'))
        .flat_map(char::to_lowercase)
        .collect()
}

fn prime_matches(cell: &str, p: u64) -> bool {
    cell == "p" || cell.parse::<u64>() == Ok(p)
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct ParamRange {
    pub min: i64,
    pub max: String,
    pub parity: String,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MuSpec {
    PowerPair { a: String, b: String },
    Delta { k: i64, l: i64, index: u64 },
    SquareAny,
    None,
}

impl MuSpec {
    /// The subgroup of `Δ` at `p`, or `None` for an unconstrained cell.
    pub fn at(&self, p: u64, e: Option<i64>) -> Result<Option<DeltaSet>> {
        Ok(match self {
            MuSpec::PowerPair { a, b } => Some(delta::power_pair(p, eval(a, p, e)?, eval(b, p, e)?)),
            MuSpec::Delta { k, l, index } => {
                let d = DeltaSubgroup::new(p, *k, *l)
                    .ok_or_else(|| ClassifyError::Data(format!("Δ_{k}/{l} needs coprime indices")))?;
                Some(delta::fraction(p, &d.elements, *index))
            }
            MuSpec::SquareAny => Some(delta::square_any(p)),
            MuSpec::None => None,
        })
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Table1Row {
    pub row: u32,
    pub section: u32,
    pub p: String,
    pub y: String,
    pub module: String,
    pub omega1_exp: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<ParamRange>,
    pub mu: String,
    pub mu_spec: Vec<MuSpec>,
    pub pearls: String,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Table1 {
    pub columns: Vec<String>,
    pub rows: Vec<Table1Row>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ImageSpec {
    EqualFull,
    Contains { k: i64, l: i64 },
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Table21Line {
    pub id: String,
    pub image: String,
    pub image_spec: ImageSpec,
    pub x: String,
    pub m: String,
    pub m_residue: Option<String>,
    pub pearls: String,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Table21 {
    pub columns: Vec<String>,
    pub lines: Vec<Table21Line>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConditionSpec {
    None,
    /// `ν_p(of) cmp value` with `of ∈ {q−1, q, q²+1}`, plus `p > p_gt`.
    Nu { of: String, cmp: String, value: u32, p_gt: u64 },
    /// `q = 2^k` with `k` odd and at least `min_exponent`.
    OddPowerOfTwo { min_exponent: u32 },
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Table3Row {
    pub row: u32,
    pub line: String,
    pub g: String,
    pub p: String,
    pub conditions: String,
    pub condition_spec: ConditionSpec,
    pub rank: String,
    pub e: String,
    pub gamma1_order: String,
    pub aut_g_gamma1: String,
    pub pearls: String,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Table3 {
    pub columns: Vec<String>,
    pub rows: Vec<Table3Row>,
}

fn parse<T: for<'de> Deserialize<'de>>(src: &str, name: &str) -> T {
    serde_json::from_str(src).unwrap_or_else(|e| panic!("embedded {name} is malformed: {e}"))
}

pub fn table1() -> &'static Table1 {
    static T: OnceLock<Table1> = OnceLock::new();
    T.get_or_init(|| parse(TABLE1, "table1.json"))
}

pub fn table21() -> &'static Table21 {
    static T: OnceLock<Table21> = OnceLock::new();
    T.get_or_init(|| parse(TABLE21, "table21.json"))
}

pub fn table3() -> &'static Table3 {
    static T: OnceLock<Table3> = OnceLock::new();
    T.get_or_init(|| parse(TABLE3, "table3.json"))
}

/// Admissible values of the row parameter `e`, or `[None]` for unparametrized rows.
fn parameter_values(row: &Table1Row, p: u64) -> Result<Vec<Option<i64>>> {
    let Some(range) = &row.e else { return Ok(vec![None]) };
    let max = eval(&range.max, p, None)?;
    let want = if range.parity == "odd" { 1 } else { 0 };
    Ok((range.min..=max).filter(|e| e.rem_euclid(2) == want).map(Some).collect())
}

/// Rows of Table 1 whose `p`, `Y`, `|Ω₁(γ₁(S))| = p^m` and μ-image all match.
///
/// `mu_image = None` matches only rows whose μ cell is empty.
pub fn table1_lookup(p: u64, y: &str, m: u32, mu_image: Option<&DeltaSet>) -> Result<Vec<&'static Table1Row>> {
    let key = normalize(y);
    let mut out = Vec::new();
    for row in &table1().rows {
        if !prime_matches(&row.p, p) {
            continue;
        }
        let with_p = row.y.replace("(p)", &format!("({p})")).replace("(p+1)", &format!("({})", p + 1));
        if normalize(&row.y) != key && normalize(&with_p) != key {
            continue;
        }
        let mut hit = false;
        for e in parameter_values(row, p)? {
            if eval(&row.omega1_exp, p, e)? != m as i64 {
                continue;
            }
            for spec in &row.mu_spec {
                if spec.at(p, e)?.as_ref() == mu_image {
                    hit = true;
                }
            }
        }
        if hit {
            out.push(row);
        }
    }
    if out.is_empty() {
        return Err(ClassifyError::Miss(format!("Table 1 has no row for p = {p}, Y = {y}, |Ω₁(γ₁(S))| = {p}^{m}")));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Constellation {
    pub lines: Vec<Table21Line>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explanation: Option<String>,
}

/// Lines of Table 2.1 satisfied by the μ₁-image and `|γ₁(S)| = p^m`.
pub fn table21_constellation(image: &DeltaSet, m: u32, p: u64) -> Result<Constellation> {
    let full = delta::full(p);
    let mut lines = Vec::new();
    for line in &table21().lines {
        let image_ok = match &line.image_spec {
            ImageSpec::EqualFull => *image == full,
            ImageSpec::Contains { k, l } => {
                let d = DeltaSubgroup::new(p, *k, *l).ok_or_else(|| ClassifyError::Data("non-coprime Δ".into()))?;
                d.elements.is_subset(image)
            }
        };
        let m_ok = match &line.m_residue {
            None => true,
            Some(r) => (m as i64 - eval(r, p, None)?).rem_euclid((p - 1) as i64) == 0,
        };
        if image_ok && m_ok {
            lines.push(line.clone());
        }
    }
    let explanation = lines.is_empty().then(|| {
        format!("the image (order {}) contains neither Δ_0 nor Δ_-1 and is not all of Δ", image.len())
    });
    Ok(Constellation { lines, explanation })
}

fn nu(mut n: u128, p: u64) -> u32 {
    let mut k = 0;
    while n > 0 && n % p as u128 == 0 {
        n /= p as u128;
        k += 1;
    }
    k
}

fn condition_holds(spec: &ConditionSpec, p: u64, q: Option<u64>) -> Result<bool> {
    Ok(match spec {
        ConditionSpec::None => true,
        ConditionSpec::Nu { of, cmp, value, p_gt } => {
            if p <= *p_gt {
                return Ok(false);
            }
            let Some(q) = q else { return Ok(true) };
            let q = q as u128;
            let n = match of.as_str() {
                "q-1" => q - 1,
                "q" => q,
                "q^2+1" => q * q + 1,
                other => return Err(ClassifyError::Data(format!("unknown valuation argument {other:?}"))),
            };
            let v = nu(n, p);
            match cmp.as_str() {
                "eq" => v == *value,
                "ge" => v >= *value,
                other => return Err(ClassifyError::Data(format!("unknown comparison {other:?}"))),
            }
        }
        ConditionSpec::OddPowerOfTwo { min_exponent } => match q {
            None => true,
            Some(q) => q.is_power_of_two() && {
                let k = q.trailing_zeros();
                k % 2 == 1 && k >= *min_exponent
            },
        },
    })
}

/// Rows of Table 3 for a group family at `p`; `q = None` leaves field conditions open.
pub fn table3_lookup(family: &str, p: u64, q: Option<u64>) -> Result<Vec<&'static Table3Row>> {
    let key = normalize(family);
    let mut out = Vec::new();
    for row in &table3().rows {
        if normalize(&row.g) != key || !prime_matches(&row.p, p) {
            continue;
        }
        if condition_holds(&row.condition_spec, p, q)? {
            out.push(row);
        }
    }
    if out.is_empty() {
        return Err(ClassifyError::Miss(format!("Table 3 has no row for {family} at p = {p}")));
    }
    Ok(out)
}

/// A single cell addressed through one of the lookups.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(tag = "lookup", rename_all = "snake_case")]
pub enum CellQuery {
    Table1 { p: u64, y: String, m: u32, mu: MuSpec, row: u32, field: String },
    /// `image` is `"full"` or `"delta:i"` for `Δ_i`.
    Table21 { p: u64, m: u32, image: String, line: String, occurrence: usize },
    Table3 { family: String, p: u64, #[serde(default)] q: Option<u64>, field: String },
}

fn field<T: Serialize>(row: &T, name: &str) -> Result<String> {
    let v = serde_json::to_value(row).map_err(|e| ClassifyError::Data(e.to_string()))?;
    match v.get(name) {
        Some(serde_json::Value::String(s)) => Ok(s.clone()),
        _ => Err(ClassifyError::Data(format!("no text column {name:?}"))),
    }
}

impl CellQuery {
    /// The cell text exactly as stored in the data file.
    pub fn resolve(&self) -> Result<String> {
        match self {
            CellQuery::Table1 { p, y, m, mu, row, field: name } => {
                let image = mu.at(*p, None)?;
                let rows = table1_lookup(*p, y, *m, image.as_ref())?;
                let r = rows
                    .iter()
                    .find(|r| r.row == *row)
                    .ok_or_else(|| ClassifyError::Miss(format!("row {row} not among the matches")))?;
                field(r, name)
            }
            CellQuery::Table21 { p, m, image, line, occurrence } => {
                let set = match image.as_str() {
                    "full" => delta::full(*p),
                    s => {
                        let i: i64 = s
                            .strip_prefix("delta:")
                            .and_then(|i| i.parse().ok())
                            .ok_or_else(|| ClassifyError::Data(format!("bad image {s:?}")))?;
                        DeltaSubgroup::diagonal(*p, i).elements
                    }
                };
                let c = table21_constellation(&set, *m, *p)?;
                c.lines
                    .iter()
                    .filter(|l| l.id == *line)
                    .nth(*occurrence)
                    .map(|l| l.pearls.clone())
                    .ok_or_else(|| ClassifyError::Miss(format!("line {line} does not apply")))
            }
            CellQuery::Table3 { family, p, q, field: name } => {
                let rows = table3_lookup(family, *p, *q)?;
                field(rows[0], name)
            }
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_loads_with_expected_shape() {
        assert_eq!(table1().rows.len(), 34);
        assert!(table1().rows.iter().enumerate().all(|(i, r)| r.row as usize == i + 1));
        assert_eq!(table21().lines.len(), 6);
        assert_eq!(table3().rows.len(), 10);
    }

    #[test]
    fn evaluator() {
        assert_eq!(eval("p-4", 11, None).unwrap(), 7);
        assert_eq!(eval("e+1", 11, Some(3)).unwrap(), 4);
        assert_eq!(eval("-1", 11, None).unwrap(), -1);
        assert!(eval("e", 11, None).is_err());
        assert!(eval("q", 11, None).is_err());
    }

    #[test]
    fn every_mu_cell_is_a_subgroup() {
        for p in [5u64, 7, 11, 13] {
            for row in &table1().rows {
                for e in parameter_values(row, p).unwrap() {
                    for spec in &row.mu_spec {
                        if let Some(set) = spec.at(p, e).unwrap() {
                            assert!(delta::is_subgroup(p, &set), "row {} at p = {p}", row.row);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn misses_are_explicit() {
        assert!(matches!(table1_lookup(7, "J_1", 7, None), Err(ClassifyError::Miss(_))));
        assert!(matches!(table3_lookup("Monster", 7, None), Err(ClassifyError::Miss(_))));
    }
}
