//! Content-addressed plain-text cache for catalogues, coefficient tables
//! and certificate reports.
//!
//! Artifacts are ordinary text files so they can be inspected and diffed.
//! A cached file is reused only if it parses and its self-declared hashes
//! match what the current pipeline expects; anything else is a hard error
//! rather than a silent regeneration, so a corrupted cache never passes
//! unnoticed.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

use potts_core::coeffs::{compute_coeff_set, Case, CoeffSet};
use potts_core::localview::{generate_catalogue, Catalogue};

/// Directory holding the cached artifacts. Resolution order: the
/// `--cache-dir` flag, the `POTTS_CACHE_DIR` environment variable, then
/// `.pottscache` under the current directory.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn resolve(flag: Option<PathBuf>) -> Cache {
        let dir = flag
            .or_else(|| std::env::var_os("POTTS_CACHE_DIR").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".pottscache"));
        Cache { dir }
    }

    fn catalogue_path(&self, d: usize) -> PathBuf {
        self.dir.join(format!("cat-d{d}.txt"))
    }

    fn coeffs_path(&self, d: usize, case: Case, cat_hash: &str) -> PathBuf {
        let short = &cat_hash[..12.min(cat_hash.len())];
        self.dir
            .join(format!("coeffs-d{d}-{}-{short}.txt", case.label()))
    }

    pub fn report_path(&self, case: Case) -> PathBuf {
        self.dir.join(format!("report-{}.txt", case.label()))
    }

    /// Loads the degree-d catalogue from the cache, or enumerates and
    /// caches it. Returns the catalogue and whether it came from the cache.
    pub fn load_or_generate_catalogue(&self, d: usize) -> Result<(Catalogue, bool)> {
        let path = self.catalogue_path(d);
        if path.exists() {
            let text =
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let cat = Catalogue::from_text(&text)
                .map_err(|e| anyhow::anyhow!("{e}"))
                .with_context(|| format!("cached catalogue {} is invalid", path.display()))?;
            if cat.d() != d {
                bail!(
                    "cached catalogue {} has degree {}, expected {d}",
                    path.display(),
                    cat.d()
                );
            }
            return Ok((cat, true));
        }
        let cat = generate_catalogue(d).map_err(|e| anyhow::anyhow!("{e}"))?;
        self.write_atomic(&path, &cat.to_text())?;
        Ok((cat, false))
    }

    /// Loads the coefficient set for (catalogue, case) from the cache, or
    /// computes and caches it. A cached file whose declared catalogue hash
    /// differs from the given catalogue is rejected.
    pub fn load_or_compute_coeffs(&self, cat: &Catalogue, case: Case) -> Result<(CoeffSet, bool)> {
        let path = self.coeffs_path(cat.d(), case, cat.hash());
        if path.exists() {
            let text =
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let set = CoeffSet::from_text(&text)
                .map_err(|e| anyhow::anyhow!("{e}"))
                .with_context(|| format!("cached coefficients {} are invalid", path.display()))?;
            if set.catalogue_hash() != cat.hash() || set.d() != cat.d() || set.case() != case {
                bail!(
                    "cached coefficients {} do not match the current catalogue",
                    path.display()
                );
            }
            return Ok((set, true));
        }
        let set = compute_coeff_set(cat, case).map_err(|e| anyhow::anyhow!("{e}"))?;
        self.write_atomic(&path, &set.to_text())?;
        Ok((set, false))
    }

    /// Writes text to a path via a temporary file in the same directory,
    /// so a crash cannot leave a truncated artifact behind.
    pub fn write_atomic(&self, path: &Path, text: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating {}", self.dir.display()))?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, path).with_context(|| format!("renaming {} into place", tmp.display()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_flag_over_default() {
        let c = Cache::resolve(Some(PathBuf::from("/tmp/somewhere")));
        assert_eq!(c.catalogue_path(4), Path::new("/tmp/somewhere/cat-d4.txt"));
    }

    #[test]
    fn round_trips_a_small_catalogue() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::resolve(Some(dir.path().to_path_buf()));
        let (cat, cached) = cache.load_or_generate_catalogue(2).unwrap();
        assert!(!cached);
        let (again, cached) = cache.load_or_generate_catalogue(2).unwrap();
        assert!(cached);
        assert_eq!(again.hash(), cat.hash());

        let (set, cached) = cache.load_or_compute_coeffs(&cat, Case::MinQ5).unwrap();
        assert!(!cached);
        let (set2, cached) = cache.load_or_compute_coeffs(&cat, Case::MinQ5).unwrap();
        assert!(cached);
        assert_eq!(set.len(), set2.len());
    }

    #[test]
    fn corrupted_catalogue_is_a_hard_error() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::resolve(Some(dir.path().to_path_buf()));
        let (cat, _) = cache.load_or_generate_catalogue(2).unwrap();

        // Flip the declared hash; the recomputed hash no longer matches.
        let mangled = cat.to_text().replacen("hash=", "hash=0000", 1);
        let path = dir.path().join("cat-d2.txt");
        fs::write(&path, mangled).unwrap();
        let err = cache.load_or_generate_catalogue(2).unwrap_err();
        assert!(format!("{err:#}").contains("invalid"));
    }
}
