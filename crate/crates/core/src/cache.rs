//! On-disk cache of canonical character tables, keyed by group content hash.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::chartab::CharacterTable;
use crate::error::Result;
use crate::perm::FiniteGroup;

pub const CACHE_ENV: &str = "PSI_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".psi-cache";

#[derive(Clone, Debug, Default)]
pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    /// Always recompute.
    pub fn disabled() -> Self {
        TableCache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: Some(dir.into()) }
    }

    /// `$PSI_CACHE_DIR`, falling back to `.psi-cache/`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| DEFAULT_CACHE_DIR.into());
        Self::at(dir)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn entry_path(&self, g: &FiniteGroup) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.chartab", g.content_hash())))
    }

    /// The table of `g`: a cached copy if it re-verifies, otherwise computed
    /// and stored. Entries that fail to parse or verify are overwritten.
    pub fn table(&self, g: &FiniteGroup) -> Result<CharacterTable> {
        let Some(path) = self.entry_path(g) else {
            return CharacterTable::compute(g);
        };
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(t) = CharacterTable::parse(g, &text) {
                return Ok(t);
            }
        }
        let table = CharacterTable::compute(g)?;
        let _ = store(&path, table.serialized());
        Ok(table)
    }
}

/// Write to a temporary sibling, then rename over the target.
fn store(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().expect("cache entries live in a directory");
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
