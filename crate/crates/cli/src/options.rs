use mcf_groupkernel::Caps;

use crate::cache::Cache;
use crate::error::{CliError, Result};

#[derive(Clone, Debug)]
pub struct Options {
    pub caps: Caps,
    /// Cap violations abort with exit code 2 instead of being reported as skipped sections.
    pub strict: bool,
    pub cache: Cache,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { caps: Caps::default(), strict: false, cache: Cache::off(), timing: false }
    }
}

impl Options {
    /// Runs `f`; in non-strict mode a cap error becomes `Ok(None)` and is
    /// passed to `skipped`.
    pub fn capped<T>(&self, f: impl FnOnce() -> Result<T>, skipped: impl FnOnce(String)) -> Result<Option<T>> {
        match f() {
            Ok(v) => Ok(Some(v)),
            Err(CliError::Cap(why)) if !self.strict => {
                skipped(why);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}
