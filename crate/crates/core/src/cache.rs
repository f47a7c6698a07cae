//! Persistent coefficient cache.
//!
//! A JSON file `{"version": N, "entries": {"<key>": "<decimal>"}}`. Keys are
//! built from canonical argument encodings so lookups are deterministic.
//! The cache only ever short-circuits a computation; an unreadable or
//! mismatched file is discarded with a warning.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub entries: BTreeMap<String, String>,
}

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: Mutex<BTreeMap<String, String>>,
}

impl Cache {
    pub fn in_memory() -> Self {
        Cache::default()
    }

    /// Opens `path`. A missing file gives an empty cache; a corrupt one gives
    /// an empty cache plus a warning message for the caller to report.
    pub fn open(path: impl AsRef<Path>) -> (Self, Option<String>) {
        let path = path.as_ref().to_path_buf();
        let (entries, warning) = match fs::read_to_string(&path) {
            Err(e) if e.kind() == io::ErrorKind::NotFound => (BTreeMap::new(), None),
            Err(e) => (
                BTreeMap::new(),
                Some(format!("ignoring cache {}: {e}", path.display())),
            ),
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(file) if file.version == CACHE_VERSION => {
                    if file.entries.values().all(|v| BigInt::from_str(v).is_ok()) {
                        (file.entries, None)
                    } else {
                        (
                            BTreeMap::new(),
                            Some(format!(
                                "ignoring cache {}: non-integer entry",
                                path.display()
                            )),
                        )
                    }
                }
                Ok(file) => (
                    BTreeMap::new(),
                    Some(format!(
                        "ignoring cache {}: version {} (expected {CACHE_VERSION})",
                        path.display(),
                        file.version
                    )),
                ),
                Err(e) => (
                    BTreeMap::new(),
                    Some(format!("ignoring cache {}: {e}", path.display())),
                ),
            },
        };
        (
            Cache {
                path: Some(path),
                entries: Mutex::new(entries),
            },
            warning,
        )
    }

    pub fn get(&self, key: &str) -> Option<BigInt> {
        let entries = self.entries.lock().unwrap();
        entries.get(key).and_then(|v| BigInt::from_str(v).ok())
    }

    pub fn put(&self, key: String, value: &BigInt) {
        self.entries.lock().unwrap().insert(key, value.to_string());
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn snapshot(&self) -> CacheFile {
        CacheFile {
            version: CACHE_VERSION,
            entries: self.entries.lock().unwrap().clone(),
        }
    }

    /// Writes the cache back to its file; a no-op for in-memory caches.
    pub fn save(&self) -> io::Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let text = serde_json::to_string_pretty(&self.snapshot())?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let (cache, warning) = Cache::open(&path);
        assert!(warning.is_none());
        assert!(cache.is_empty());
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        cache.put("x".into(), &big);
        cache.save().unwrap();

        let (again, warning) = Cache::open(&path);
        assert!(warning.is_none());
        assert_eq!(again.get("x"), Some(big));
        assert_eq!(again.get("y"), None);
    }

    #[test]
    fn corrupt_file_is_ignored_with_warning() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        fs::write(&path, "{not json").unwrap();
        let (cache, warning) = Cache::open(&path);
        assert!(warning.is_some());
        assert!(cache.is_empty());

        fs::write(&path, r#"{"version":99,"entries":{}}"#).unwrap();
        assert!(Cache::open(&path).1.is_some());

        fs::write(&path, r#"{"version":1,"entries":{"a":"12x"}}"#).unwrap();
        let (cache, warning) = Cache::open(&path);
        assert!(warning.is_some());
        assert!(cache.is_empty());
    }
}
