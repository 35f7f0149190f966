//! Line-delimited JSON cache for verification sweeps.
//!
//! One entry per line keeps the file append-friendly: concurrent batch runs
//! may write without coordination because an entry is a pure function of its
//! key, so last-writer-wins on load is harmless. Entries recorded by other
//! tool versions are ignored. IO trouble never aborts a run; the cache
//! degrades to a warning and the computation proceeds from scratch.

use dedeck::{ReconReport, ReportWire};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable consulted for the cache path when no flag is given.
pub const ENV_CACHE_PATH: &str = "DERN_CACHE";

pub fn tool_version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

/// One cached computation, keyed by the canonical graph6 form of the graph.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CacheEntry {
    pub key: String,
    pub dedeck: String,
    pub report: Option<ReportWire>,
    pub tool_version: String,
}

pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, CacheEntry>,
}

impl Cache {
    /// Loads the entries recorded under the current tool version. A missing
    /// file is an empty cache; unreadable files and unparsable lines are
    /// reported and skipped.
    pub fn load(path: &Path) -> Cache {
        let mut entries = BTreeMap::new();
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for line in text.lines().filter(|l| !l.trim().is_empty()) {
                    match serde_json::from_str::<CacheEntry>(line) {
                        Ok(entry) if entry.tool_version == tool_version() => {
                            entries.insert(entry.key.clone(), entry);
                        }
                        Ok(_) => {} // stale version: recompute silently
                        Err(e) => eprintln!(
                            "warning: skipping malformed cache line in {}: {e}",
                            path.display()
                        ),
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => eprintln!("warning: cannot read cache {}: {e}", path.display()),
        }
        Cache {
            path: path.to_path_buf(),
            entries,
        }
    }

    /// Returns the cached report for a canonical key, re-validated; invalid
    /// entries are reported and treated as misses.
    pub fn lookup_report(&self, key: &str) -> Option<ReconReport> {
        let wire = self.entries.get(key)?.report.as_ref()?;
        match ReconReport::from_wire(wire) {
            Ok(report) => Some(report),
            Err(e) => {
                eprintln!("warning: ignoring invalid cache entry for {key}: {e}");
                None
            }
        }
    }

    /// Appends freshly computed entries, one JSON object per line.
    pub fn append(&self, fresh: &[CacheEntry]) {
        if fresh.is_empty() {
            return;
        }
        let result = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .and_then(|mut file| {
                for entry in fresh {
                    let line = serde_json::to_string(entry).expect("cache entry serializes");
                    writeln!(file, "{line}")?;
                }
                Ok(())
            });
        if let Err(e) = result {
            eprintln!("warning: cannot write cache {}: {e}", self.path.display());
        }
    }
}
