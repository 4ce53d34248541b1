//! On-disk cache of invariant series keyed by a SHA-256 of the canonical
//! document. Entries record the `n_max` they were computed to; a longer request
//! computes only the missing points.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ass::{AssSet, MonomialPrime};
use crate::extint::ExtInt;
use crate::kernel::Monomial;
use crate::lab::family::{evaluate_points, series_flags, FamilyKind, FamilySpec, InvariantSeries, SeriesPoint};
use crate::vnumber::VReport;

pub const CACHE_ENV: &str = "VNUM_CACHE_DIR";
const FORMAT_VERSION: u32 = 1;

pub fn cache_key(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

#[derive(Serialize, Deserialize)]
struct StoredPoint {
    n: u32,
    indeg: Option<i64>,
    v: Option<i64>,
    per_prime: Vec<(Vec<usize>, i64)>,
    witnesses: Vec<(Vec<usize>, Vec<u32>)>,
    ass: Vec<Vec<usize>>,
    colon_stable: bool,
}

#[derive(Serialize, Deserialize)]
struct StoredSeries {
    version: u32,
    key: String,
    kind: FamilyKind,
    nvars: usize,
    n_max: u32,
    ann_i_zero: bool,
    ann_y1_zero: bool,
    points: Vec<StoredPoint>,
}

fn finite_or_inf(x: ExtInt) -> Option<i64> {
    x.finite()
}

fn store_point(p: &SeriesPoint) -> StoredPoint {
    StoredPoint {
        n: p.n,
        indeg: finite_or_inf(p.indeg),
        v: finite_or_inf(p.v.overall),
        per_prime: p.v.per_prime.iter().map(|(q, &v)| (q.support().to_vec(), v)).collect(),
        witnesses: p
            .v
            .witnesses
            .iter()
            .map(|(q, w)| (q.support().to_vec(), w.exponents().to_vec()))
            .collect(),
        ass: p.ass.iter().map(|q| q.support().to_vec()).collect(),
        colon_stable: p.colon_stable,
    }
}

fn prime(support: &[usize], nvars: usize) -> Option<MonomialPrime> {
    support
        .iter()
        .all(|&i| i < nvars)
        .then(|| MonomialPrime::new(support.to_vec()))
}

fn load_point(s: &StoredPoint, nvars: usize) -> Option<SeriesPoint> {
    let inf = |x: Option<i64>| x.map_or(ExtInt::PosInf, ExtInt::Finite);
    let mut per_prime = std::collections::BTreeMap::new();
    for (q, v) in &s.per_prime {
        per_prime.insert(prime(q, nvars)?, *v);
    }
    let mut witnesses = std::collections::BTreeMap::new();
    for (q, w) in &s.witnesses {
        if w.len() != nvars {
            return None;
        }
        witnesses.insert(prime(q, nvars)?, Monomial::new(w.clone()));
    }
    let ass: AssSet = s
        .ass
        .iter()
        .map(|q| prime(q, nvars))
        .collect::<Option<Vec<_>>>()?
        .into_iter()
        .collect();
    Some(SeriesPoint {
        n: s.n,
        indeg: inf(s.indeg),
        v: VReport {
            per_prime,
            overall: inf(s.v),
            witnesses,
        },
        ass,
        colon_stable: s.colon_stable,
    })
}

/// How a series request was served.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Miss,
    Hit,
    /// Points up to `cached_n_max` came from disk, the rest were computed.
    Extended { cached_n_max: u32 },
}

pub struct SeriesCache {
    dir: PathBuf,
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SeriesCache { dir: dir.into() }
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A valid entry for `key`, or `None` for missing and corrupt files.
    pub fn load(&self, key: &str, kind: FamilyKind, nvars: usize) -> Option<InvariantSeries> {
        let bytes = fs::read(self.path(key)).ok()?;
        let stored: StoredSeries = serde_json::from_slice(&bytes).ok()?;
        if stored.version != FORMAT_VERSION || stored.key != key || stored.kind != kind || stored.nvars != nvars {
            return None;
        }
        let points = stored
            .points
            .iter()
            .map(|p| load_point(p, nvars))
            .collect::<Option<Vec<_>>>()?;
        let ordered = points.iter().enumerate().all(|(k, p)| p.n as usize == k);
        if !ordered || points.len() != stored.n_max as usize + 1 {
            return None;
        }
        Some(InvariantSeries {
            kind: stored.kind,
            points,
            ann_i_zero: stored.ann_i_zero,
            ann_y1_zero: stored.ann_y1_zero,
        })
    }

    /// Writes atomically: a temporary file in the cache directory is renamed
    /// over the entry.
    pub fn store(&self, key: &str, nvars: usize, series: &InvariantSeries) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let stored = StoredSeries {
            version: FORMAT_VERSION,
            key: key.to_string(),
            kind: series.kind,
            nvars,
            n_max: series.last_n(),
            ann_i_zero: series.ann_i_zero,
            ann_y1_zero: series.ann_y1_zero,
            points: series.points.iter().map(store_point).collect(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &stored)?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

/// Evaluates `spec` for `n = 0..=spec.n_max`, reusing and updating the cache
/// entry under `key` when a cache is given.
pub fn series_with_cache(
    spec: &FamilySpec,
    key: &str,
    cache: Option<&SeriesCache>,
) -> crate::Result<(InvariantSeries, CacheStatus)> {
    let nvars = spec.ring().nvars();
    let Some(cache) = cache else {
        return Ok((crate::lab::evaluate_series(spec)?, CacheStatus::Disabled));
    };
    let found = cache.load(key, spec.kind, nvars);
    let (series, status) = match found {
        Some(mut s) if s.last_n() >= spec.n_max => {
            s.points.truncate(spec.n_max as usize + 1);
            return Ok((s, CacheStatus::Hit));
        }
        Some(mut s) => {
            let cached_n_max = s.last_n();
            s.points
                .extend(evaluate_points(spec, cached_n_max + 1, spec.n_max)?);
            (s, CacheStatus::Extended { cached_n_max })
        }
        None => {
            let (ann_i_zero, ann_y1_zero) = series_flags(spec)?;
            let s = InvariantSeries {
                kind: spec.kind,
                points: evaluate_points(spec, 0, spec.n_max)?,
                ann_i_zero,
                ann_y1_zero,
            };
            (s, CacheStatus::Miss)
        }
    };
    // A failed write only loses the cache entry.
    let _ = cache.store(key, nvars, &series);
    Ok((series, status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::golden::xyz_family;

    #[test]
    fn prefix_extension_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let spec = xyz_family().with_n_max(5);
        let key = cache_key("example");
        let (s1, st1) = series_with_cache(&spec, &key, Some(&cache)).unwrap();
        assert_eq!(st1, CacheStatus::Miss);
        let (s2, st2) = series_with_cache(&spec, &key, Some(&cache)).unwrap();
        assert_eq!(st2, CacheStatus::Hit);
        assert_eq!(s1, s2);

        let longer = spec.with_n_max(7);
        let (s3, st3) = series_with_cache(&longer, &key, Some(&cache)).unwrap();
        assert_eq!(st3, CacheStatus::Extended { cached_n_max: 5 });
        assert_eq!(s3, crate::lab::evaluate_series(&longer).unwrap());

        let (s4, st4) = series_with_cache(&spec.with_n_max(4), &key, Some(&cache)).unwrap();
        assert_eq!(st4, CacheStatus::Hit);
        assert_eq!(s4.points.len(), 5);

        fs::write(cache.path(&key), b"{not json").unwrap();
        let (s5, st5) = series_with_cache(&spec, &key, Some(&cache)).unwrap();
        assert_eq!(st5, CacheStatus::Miss);
        assert_eq!(s5, s1);
    }
}
