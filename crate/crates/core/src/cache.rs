//! On-disk cache of computed subspaces, keyed by object kind, bidegree and a
//! hash of the sources that compute them. Entries written by other code
//! versions are never read.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "LSDUAL_CACHE_DIR";

const SOURCES: &[&str] = &[
    env!("CARGO_PKG_VERSION"),
    include_str!("rational.rs"),
    include_str!("linalg.rs"),
    include_str!("lincomb.rs"),
    include_str!("combinat.rs"),
    include_str!("series.rs"),
    include_str!("commring.rs"),
    include_str!("lsspace.rs"),
    include_str!("ncalg/word.rs"),
    include_str!("ncalg/yword.rs"),
    include_str!("ncalg/ops.rs"),
    include_str!("dihedral/index.rs"),
    include_str!("dihedral/spaces.rs"),
    include_str!("context.rs"),
];

/// Hex SHA-256 of the sources that determine cached payloads.
pub fn code_version() -> &'static str {
    static VERSION: OnceLock<String> = OnceLock::new();
    VERSION.get_or_init(|| {
        let mut h = Sha256::new();
        for s in SOURCES {
            h.update((s.len() as u64).to_le_bytes());
            h.update(s.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub kind: String,
    pub m: usize,
    pub k: usize,
    pub version: String,
    pub created_at: u64,
    pub payload: serde_json::Value,
}

/// One file listed by [`Cache::status`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryInfo {
    pub name: String,
    pub bytes: u64,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The explicit directory if given, else the one named by the
    /// environment, else none.
    pub fn resolve(flag: Option<&Path>) -> Option<Self> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, kind: &str, m: usize, k: usize) -> PathBuf {
        self.dir.join(format!("{kind}-{m}-{k}-{}.json", &code_version()[..16]))
    }

    pub fn get(&self, kind: &str, m: usize, k: usize) -> Option<serde_json::Value> {
        let bytes = fs::read(self.path(kind, m, k)).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
        let matches = entry.kind == kind && entry.m == m && entry.k == k && entry.version == code_version();
        matches.then_some(entry.payload)
    }

    /// Writes an entry through a temporary file and an atomic rename.
    pub fn put(&self, kind: &str, m: usize, k: usize, payload: serde_json::Value) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            kind: kind.to_string(),
            m,
            k,
            version: code_version().to_string(),
            created_at: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            payload,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path(kind, m, k)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Cache files in name order; a missing directory has no entries.
    pub fn status(&self) -> Result<Vec<EntryInfo>> {
        let rd = match fs::read_dir(&self.dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for e in rd {
            let e = e?;
            let name = e.file_name().to_string_lossy().into_owned();
            if name.ends_with(".json") {
                out.push(EntryInfo {
                    name,
                    bytes: e.metadata()?.len(),
                });
            }
        }
        out.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(out)
    }

    /// Removes every cache file, returning how many there were.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.status()?;
        for e in &entries {
            fs::remove_file(self.dir.join(&e.name))?;
        }
        Ok(entries.len())
    }
}
