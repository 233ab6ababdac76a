//! On-disk cache of rendered reports, keyed by a hash of everything that
//! can change the output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use sha2::{Digest, Sha256};

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: PathBuf) -> Self {
        Cache { dir: Some(dir) }
    }

    /// `$XDG_CACHE_HOME/knotpair`, else `$HOME/.cache/knotpair`.
    pub fn default_dir() -> Option<PathBuf> {
        std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
            .map(|d| d.join("knotpair"))
    }

    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION"));
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.out")))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)?).ok()
    }

    /// Writes through a temporary file in the same directory and renames
    /// it into place.
    pub fn put(&self, key: &str, value: &str) -> Result<()> {
        let (Some(dir), Some(path)) = (&self.dir, self.path(key)) else {
            return Ok(());
        };
        fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(value.as_bytes())?;
        tmp.persist(&path)
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    /// Cached value for `key`, computing and storing it on a miss.
    pub fn get_or_insert(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = compute()?;
        if let Err(e) = self.put(key, &v) {
            eprintln!("warning: cache write failed: {e:#}");
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::at(dir.path().join("c"));
        let k = Cache::key(&["a", "b"]);
        assert_ne!(k, Cache::key(&["ab"]));
        assert!(c.get(&k).is_none());
        let v = c.get_or_insert(&k, || Ok("x\n".into())).unwrap();
        assert_eq!(v, "x\n");
        assert_eq!(c.get_or_insert(&k, || unreachable!()).unwrap(), "x\n");
        let off = Cache::disabled();
        off.put(&k, "y").unwrap();
        assert!(off.get(&k).is_none());
    }
}
