//! Report rows, CSV projection and the line-delimited row cache.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::covering::Sigma;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub group: String,
    pub order: usize,
    pub sigma: Sigma,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default)]
    pub flags: BTreeMap<String, Value>,
    /// Element lists of the witness subgroups, each ascending.
    #[serde(default)]
    pub witness: Vec<Vec<usize>>,
}

impl ReportRow {
    pub fn new(group: impl Into<String>, order: usize, sigma: Sigma) -> Self {
        ReportRow {
            group: group.into(),
            order,
            sigma,
            k: None,
            mu: None,
            ratio: None,
            bound: None,
            holds: None,
            flags: BTreeMap::new(),
            witness: Vec::new(),
        }
    }

    pub fn flag(mut self, name: &str, value: impl Serialize) -> Self {
        self.flags
            .insert(name.to_string(), serde_json::to_value(value).expect("flag serializes"));
        self
    }

    /// Merges the fields of a serializable struct into `flags`.
    pub fn flags_from(mut self, value: impl Serialize) -> Self {
        if let Value::Object(map) = serde_json::to_value(value).expect("flags serialize") {
            self.flags.extend(map);
        }
        self
    }
}

pub const CSV_HEADER: [&str; 9] = ["group", "order", "sigma", "k", "mu", "ratio", "bound", "holds", "flags"];

/// CSV projection of `rows`; witness lists are dropped and flags become one JSON cell.
pub fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(CSV_HEADER).expect("in-memory write");
    let opt = |v: Option<String>| v.unwrap_or_default();
    for row in rows {
        out.write_record([
            row.group.clone(),
            row.order.to_string(),
            row.sigma.to_string(),
            opt(row.k.map(|k| k.to_string())),
            opt(row.mu.map(|m| m.to_string())),
            opt(row.ratio.clone()),
            opt(row.bound.clone()),
            opt(row.holds.map(|h| h.to_string())),
            serde_json::to_string(&row.flags).expect("flags serialize"),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(out.into_inner().expect("flush")).expect("utf-8")
}

pub fn cache_key(group: &str, tag: &str) -> String {
    format!("{group}#{tag}")
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    key: String,
    row: ReportRow,
}

/// Append-only JSON-lines store of report rows; the last row written for a key wins.
///
/// Single writer: concurrent processes appending to one file are not supported.
#[derive(Debug)]
pub struct RowCache {
    path: PathBuf,
    rows: HashMap<String, ReportRow>,
    skipped: usize,
}

impl RowCache {
    /// Loads `path` if it exists. Corrupt lines are skipped with a warning on stderr.
    pub fn open(path: &Path) -> Result<Self> {
        let mut rows = HashMap::new();
        let mut skipped = 0;
        if path.exists() {
            let text = fs::read_to_string(path)?;
            for (n, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<CacheLine>(line) {
                    Ok(entry) => {
                        rows.insert(entry.key, entry.row);
                    }
                    Err(err) => {
                        skipped += 1;
                        eprintln!(
                            "warning: {}:{}: skipping corrupt cache line: {err}",
                            path.display(),
                            n + 1
                        );
                    }
                }
            }
        }
        Ok(RowCache {
            path: path.to_path_buf(),
            rows,
            skipped,
        })
    }

    pub fn get(&self, key: &str) -> Option<&ReportRow> {
        self.rows.get(key)
    }

    pub fn put(&mut self, key: &str, row: ReportRow) -> Result<()> {
        let line = serde_json::to_string(&CacheLine {
            key: key.to_string(),
            row: row.clone(),
        })
        .expect("cache line serializes");
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{line}")?;
        self.rows.insert(key.to_string(), row);
        Ok(())
    }

    pub fn skipped_lines(&self) -> usize {
        self.skipped
    }
}
