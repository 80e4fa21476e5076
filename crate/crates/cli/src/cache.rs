//! On-disk cache of per-group classification results.
//!
//! One `cache` document per catalog group, named `<order>-<id>.hdg`. A
//! record is trusted only if its format version matches and its
//! fingerprint `(order, |IE(G)|)` agrees with the group at hand; any
//! failure is reported and the caller recomputes.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use hdgroups::cat2::{classify, Classification};
use hdgroups::{idempotent_endomorphisms, Elem, GroupTable};

use crate::format::{Document, FormatError, Section};

/// Environment variable naming the cache directory when no flag is given.
pub const CACHE_DIR_ENV: &str = "HDGROUPS_CACHE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("no cache entry at {0}")]
    Missing(PathBuf),
    #[error("cache entry {path} has format version {found}, expected {expected}")]
    Version { path: PathBuf, found: u32, expected: u32 },
    #[error("cache entry {path} has fingerprint {found:?}, the group has {expected:?}")]
    Fingerprint { path: PathBuf, found: (usize, usize), expected: (usize, usize) },
    #[error("cache entry {path} is malformed: {message}")]
    Malformed { path: PathBuf, message: String },
    #[error("cache I/O on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// Everything the table and the inspector need about one group. Positions
/// are 0-based throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheRecord {
    pub order: usize,
    pub id: usize,
    /// Idempotent endomorphisms in canonical order, as full maps.
    pub idempotents: Vec<Vec<Elem>>,
    /// Cat¹ structures as `(tail, head)` indices into `idempotents`.
    pub cat1: Vec<(u32, u32)>,
    pub cat1_families: Vec<Vec<usize>>,
    /// Cat² structures as `i ≤ j` indices into `cat1`.
    pub cat2: Vec<(u32, u32)>,
    pub cat2_families: Vec<Vec<usize>>,
    /// Indices into `cat2_families` of the classes whose diagonal is not a
    /// cat¹-group.
    pub bad_families: Vec<usize>,
}

impl CacheRecord {
    pub fn from_classification(order: usize, id: usize, c: &Classification) -> Self {
        let cat1 = c.cat1();
        let reps = c.cat2_families.representatives();
        CacheRecord {
            order,
            id,
            idempotents: cat1.idempotents().iter().map(|f| f.map().to_vec()).collect(),
            cat1: cat1.pairs().to_vec(),
            cat1_families: c.cat1_families.0.clone(),
            cat2: c.cat2.pairs().to_vec(),
            cat2_families: c.cat2_families.0.clone(),
            bad_families: (0..reps.len()).filter(|&k| !c.cat2.diagonal_is_cat1(reps[k])).collect(),
        }
    }

    pub fn compute(order: usize, id: usize, g: &Arc<GroupTable>) -> Self {
        Self::from_classification(order, id, &classify(g))
    }

    /// `(order, |IE(G)|)`
    pub fn fingerprint(&self) -> (usize, usize) {
        (self.order, self.idempotents.len())
    }

    pub fn to_document(&self) -> Document {
        let pair_rows = |pairs: &[(u32, u32)]| pairs.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>();
        let family_rows =
            |fams: &[Vec<usize>]| fams.iter().map(|f| f.iter().map(|&x| x as u32).collect()).collect::<Vec<_>>();
        let mut doc = Document::new("cache");
        doc.push(Section::new("key").with_args([self.order as u64, self.id as u64]));
        let (o, ie) = self.fingerprint();
        doc.push(Section::new("fingerprint").with_args([o as u64, ie as u64]));
        doc.push(Section::new("idempotents").with_rows(self.idempotents.iter().cloned()));
        doc.push(Section::new("cat1").with_rows(pair_rows(&self.cat1)));
        doc.push(Section::new("cat1_families").with_rows(family_rows(&self.cat1_families)));
        doc.push(Section::new("cat2").with_rows(pair_rows(&self.cat2)));
        doc.push(Section::new("cat2_families").with_rows(family_rows(&self.cat2_families)));
        doc.push(Section::new("bad_families").with_args(self.bad_families.iter().map(|&k| k as u64)));
        doc
    }

    /// Structural decoding; the fingerprint is checked by [`Cache::load`].
    pub fn from_document(doc: &Document) -> Result<Self, FormatError> {
        doc.require("cache")?;
        let mut r = doc.reader();
        let invalid =
            |keyword: &str, message: &str| FormatError::Invalid { keyword: keyword.into(), message: message.into() };
        let key = r.expect("key")?;
        let [order, id] = key.args[..] else { return Err(invalid("key", "expected order and id")) };
        let fp = r.expect("fingerprint")?;
        let [fp_order, fp_ie] = fp.args[..] else { return Err(invalid("fingerprint", "expected order and |IE|")) };
        let idempotents = r.expect("idempotents")?.rows.clone();
        let pairs = |s: &Section| -> Result<Vec<(u32, u32)>, FormatError> {
            s.rows
                .iter()
                .map(|row| match row[..] {
                    [a, b] => Ok((a, b)),
                    _ => Err(invalid(&s.keyword, "expected pairs")),
                })
                .collect()
        };
        let families = |s: &Section| -> Vec<Vec<usize>> {
            s.rows.iter().map(|r| r.iter().map(|&x| x as usize).collect()).collect()
        };
        let cat1 = pairs(r.expect("cat1")?)?;
        let cat1_families = families(r.expect("cat1_families")?);
        let cat2 = pairs(r.expect("cat2")?)?;
        let cat2_families = families(r.expect("cat2_families")?);
        let bad_families = r.expect("bad_families")?.args.iter().map(|&k| k as usize).collect();
        r.finish()?;
        let record = CacheRecord {
            order: order as usize,
            id: id as usize,
            idempotents,
            cat1,
            cat1_families,
            cat2,
            cat2_families,
            bad_families,
        };
        if (fp_order as usize, fp_ie as usize) != record.fingerprint() {
            return Err(invalid("fingerprint", "does not match the recorded idempotents"));
        }
        record.consistency().map_err(|m| invalid("cache", &m))?;
        Ok(record)
    }

    fn consistency(&self) -> Result<(), String> {
        let n = self.order;
        if self.idempotents.iter().any(|f| f.len() != n || f.iter().any(|&y| y as usize >= n)) {
            return Err("idempotent map of the wrong shape".into());
        }
        let ie = self.idempotents.len() as u32;
        if self.cat1.iter().any(|&(t, h)| t >= ie || h >= ie) {
            return Err("cat¹ pair out of range".into());
        }
        let c1 = self.cat1.len() as u32;
        if self.cat2.iter().any(|&(i, j)| i > j || j >= c1) {
            return Err("cat² pair out of range".into());
        }
        let partition = |fams: &[Vec<usize>], len: usize| {
            let mut seen = vec![false; len];
            for &x in fams.iter().flatten() {
                if x >= len || std::mem::replace(&mut seen[x], true) {
                    return false;
                }
            }
            seen.into_iter().all(|s| s)
        };
        if !partition(&self.cat1_families, self.cat1.len()) || !partition(&self.cat2_families, self.cat2.len()) {
            return Err("families do not partition the structures".into());
        }
        if self.bad_families.iter().any(|&k| k >= self.cat2_families.len()) {
            return Err("bad family index out of range".into());
        }
        Ok(())
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, order: usize, id: usize) -> PathBuf {
        self.dir.join(format!("{order}-{id}.hdg"))
    }

    /// Reads the record for `order/id` and checks it against `g`.
    pub fn load(&self, order: usize, id: usize, g: &Arc<GroupTable>) -> Result<CacheRecord, CacheError> {
        let path = self.path(order, id);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(CacheError::Missing(path)),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let malformed =
            |path: &Path, e: FormatError| CacheError::Malformed { path: path.to_path_buf(), message: e.to_string() };
        let doc = Document::parse(&text).map_err(|e| malformed(&path, e))?;
        let record = match CacheRecord::from_document(&doc) {
            Ok(r) => r,
            Err(FormatError::Version { found, expected }) => return Err(CacheError::Version { path, found, expected }),
            Err(e) => return Err(malformed(&path, e)),
        };
        if (record.order, record.id) != (order, id) {
            let message = format!("holds {}/{}", record.order, record.id);
            return Err(CacheError::Malformed { path, message });
        }
        let expected = (g.order(), idempotent_endomorphisms(g).len());
        if record.fingerprint() != expected {
            return Err(CacheError::Fingerprint { path, found: record.fingerprint(), expected });
        }
        Ok(record)
    }

    /// Writes through a temporary file in the cache directory and renames
    /// it into place, so readers never see a partial record.
    pub fn store(&self, record: &CacheRecord) -> Result<(), CacheError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CacheError::Io { path, source }
        };
        std::fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let path = self.path(record.order, record.id);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io(&self.dir))?;
        tmp.write_all(record.to_document().emit().as_bytes()).map_err(io(&path))?;
        tmp.persist(&path).map_err(|e| CacheError::Io { path, source: e.error })?;
        Ok(())
    }

    /// The cached record when it is usable, otherwise a fresh computation
    /// that is written back. Problems other than a missing entry are
    /// passed to `warn`.
    pub fn load_or_compute(
        &self,
        order: usize,
        id: usize,
        g: &Arc<GroupTable>,
        mut warn: impl FnMut(&CacheError),
    ) -> CacheRecord {
        match self.load(order, id, g) {
            Ok(record) => return record,
            Err(CacheError::Missing(_)) => {}
            Err(e) => warn(&e),
        }
        let record = CacheRecord::compute(order, id, g);
        if let Err(e) = self.store(&record) {
            warn(&e);
        }
        record
    }
}
