//! JSON input formats for permutation groups and PC presentations.
//!
//! PC keys are 1-based: `"i"` for powers and `"j,i"` (j > i) for commutators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::pc::PcGroup;
use crate::perm::Perm;
use crate::permgroup::PermGroup;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PermFile {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PcFile {
    pub prime: u32,
    pub ngens: usize,
    #[serde(default)]
    pub powers: BTreeMap<String, Vec<u8>>,
    #[serde(default)]
    pub commutators: BTreeMap<String, Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// A parsed input group of either backend.
#[derive(Clone, Debug)]
pub enum GroupInput {
    Perm(PermGroup),
    Pc(PcGroup),
}

fn parse_index(s: &str, n: usize) -> Result<usize> {
    let i: usize = s.trim().parse().map_err(|_| GroupError::Parse(format!("bad generator index {s:?}")))?;
    if i == 0 || i > n {
        return Err(GroupError::Parse(format!("generator index {i} outside 1..={n}")));
    }
    Ok(i - 1)
}

impl PermFile {
    pub fn build(&self) -> Result<PermGroup> {
        let gens = self.generators.iter().map(|g| Perm::new(g.clone())).collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree, gens)
    }

    pub fn from_group(g: &PermGroup) -> Self {
        PermFile {
            degree: g.degree(),
            generators: g.gens().iter().map(|p| p.images().to_vec()).collect(),
            provenance: None,
        }
    }
}

impl PcFile {
    pub fn build(&self, verify_cap: u128) -> Result<PcGroup> {
        let n = self.ngens;
        let powers = self
            .powers
            .iter()
            .map(|(k, v)| Ok((parse_index(k, n)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        let comms = self
            .commutators
            .iter()
            .map(|(k, v)| {
                let (a, b) = k.split_once(',').ok_or_else(|| GroupError::Parse(format!("bad commutator key {k:?}")))?;
                Ok(((parse_index(a, n)?, parse_index(b, n)?), v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        PcGroup::new(self.prime, n, powers, comms, verify_cap)
    }

    /// Writes the nontrivial relations of `g`.
    pub fn from_group(g: &PcGroup) -> Self {
        let n = g.ngens();
        let mut powers = BTreeMap::new();
        let mut commutators = BTreeMap::new();
        for i in 0..n {
            let v = g.power_relation(i);
            if v.iter().any(|&e| e != 0) {
                powers.insert((i + 1).to_string(), v.to_vec());
            }
            for j in i + 1..n {
                let v = g.commutator_relation(j, i);
                if v.iter().any(|&e| e != 0) {
                    commutators.insert(format!("{},{}", j + 1, i + 1), v.to_vec());
                }
            }
        }
        PcFile { prime: g.prime(), ngens: n, powers, commutators, provenance: None }
    }
}

/// Parses either format, choosing PC when a `"prime"` key is present.
pub fn parse_group(text: &str, verify_cap: u128) -> Result<GroupInput> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    if value.get("prime").is_some() {
        let f: PcFile = serde_json::from_value(value).map_err(|e| GroupError::Parse(e.to_string()))?;
        Ok(GroupInput::Pc(f.build(verify_cap)?))
    } else {
        let f: PermFile = serde_json::from_value(value).map_err(|e| GroupError::Parse(e.to_string()))?;
        Ok(GroupInput::Perm(f.build()?))
    }
}
