//! On-disk cache of scan results keyed by a SHA-256 digest of their inputs.
//!
//! Entries are written to a temporary file in the cache directory and then
//! renamed into place, so readers never observe a partial entry.

use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;

pub const ENV: &str = "MCF_CACHE_DIR";

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

/// Hex digest of the length-prefixed concatenation of `parts`.
pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

impl Cache {
    /// Disabled cache.
    pub fn off() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// `$MCF_CACHE_DIR`, else `$XDG_CACHE_HOME/mcf`, else `$HOME/.cache/mcf`.
    pub fn from_env() -> Self {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        let dir = var(ENV)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("mcf")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("mcf")));
        Cache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, kind: &str, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(kind).join(format!("{key}.json")))
    }

    pub fn get(&self, kind: &str, key: &str) -> Option<Vec<u8>> {
        std::fs::read(self.path(kind, key)?).ok()
    }

    /// Stores `bytes`; a disabled cache ignores the call.
    pub fn put(&self, kind: &str, key: &str, bytes: &[u8]) -> Result<()> {
        let Some(path) = self.path(kind, key) else { return Ok(()) };
        let parent = path.parent().expect("entry has a parent directory");
        std::fs::create_dir_all(parent)?;
        let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
        tmp.write_all(bytes)?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }
}
