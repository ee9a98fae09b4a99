//! JSON-lines determinant records and the append-only table cache.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use brauer_core::combinat::cell_labels;
use brauer_core::{gram_det_table_resume, CellLabel, FactoredPoly, GramResult, Partition};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "BRAUER_CACHE_DIR";
const CACHE_FILE: &str = "gram_table.jsonl";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub schema_version: u32,
    pub n: usize,
    pub f: usize,
    pub lambda: Partition,
    pub dim: String,
    pub det: FactoredPoly,
}

impl Record {
    pub fn from_result(r: &GramResult) -> Self {
        Record {
            schema_version: SCHEMA_VERSION,
            n: r.label.n,
            f: r.label.f,
            lambda: r.label.shape.clone(),
            dim: r.dim.to_string(),
            det: r.det.clone(),
        }
    }

    pub fn to_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    fn label(&self) -> CellLabel {
        CellLabel {
            n: self.n,
            f: self.f,
            shape: self.lambda.clone(),
        }
    }

    fn to_result(&self) -> Option<GramResult> {
        Some(GramResult {
            label: self.label(),
            det: self.det.clone(),
            dim: self.dim.parse().ok()?,
        })
    }
}

/// Labels in table order: `n` ascending, then [`cell_labels`] order.
struct LabelCursor {
    n: usize,
    level: Vec<CellLabel>,
    pos: usize,
}

impl LabelCursor {
    fn new() -> Self {
        LabelCursor {
            n: 1,
            level: cell_labels(1),
            pos: 0,
        }
    }

    fn peek(&self) -> &CellLabel {
        &self.level[self.pos]
    }

    /// Advances; true when a level was just completed.
    fn advance(&mut self) -> bool {
        self.pos += 1;
        if self.pos == self.level.len() {
            self.n += 1;
            self.level = cell_labels(self.n);
            self.pos = 0;
            return true;
        }
        false
    }
}

pub fn cache_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(|d| PathBuf::from(d).join(CACHE_FILE))
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Failure(format!("{}: {e}", path.display()))
}

/// Writes every record with `n ≤ n_max` to `sink`, reusing and extending the
/// cache at `cache` when given.
pub fn write_table(n_max: usize, cache: Option<&Path>, sink: &mut dyn Write) -> Result<(), CliError> {
    let sink_err = |e: std::io::Error| CliError::Failure(format!("output: {e}"));
    let Some(path) = cache else {
        return brauer_core::gram::gram_det_table_with(n_max, 1, |r| {
            sink.write_all(Record::from_result(&r).to_line().as_bytes())
                .map_err(|e| brauer_core::Error::Precondition(e.to_string()))
        })
        .map_err(CliError::from);
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    }
    let mut cursor = LabelCursor::new();
    let mut seed: Vec<GramResult> = Vec::new();
    let mut partial: Vec<GramResult> = Vec::new();
    let mut valid_bytes: u64 = 0;
    let mut corrupt_at = None;
    if path.exists() {
        let file = File::open(path).map_err(|e| io_err(path, e))?;
        let mut reader = BufReader::new(file);
        let mut line = String::new();
        let mut lineno = 0;
        loop {
            if cursor.n > n_max {
                break;
            }
            line.clear();
            let read = match reader.read_line(&mut line) {
                Ok(r) => r,
                Err(_) => {
                    corrupt_at = Some(lineno + 1);
                    break;
                }
            };
            if read == 0 {
                break;
            }
            lineno += 1;
            let parsed = line
                .ends_with('\n')
                .then(|| serde_json::from_str::<Record>(&line).ok())
                .flatten()
                .filter(|r| r.schema_version == SCHEMA_VERSION && &r.label() == cursor.peek())
                .filter(|r| r.to_line() == line)
                .and_then(|r| r.to_result());
            let Some(result) = parsed else {
                corrupt_at = Some(lineno);
                break;
            };
            valid_bytes += read as u64;
            sink.write_all(line.as_bytes()).map_err(sink_err)?;
            partial.push(result);
            if cursor.advance() {
                seed = std::mem::take(&mut partial);
            }
        }
    }
    if let Some(lineno) = corrupt_at {
        eprintln!(
            "warning: cache {} is corrupt from line {lineno}; truncating",
            path.display()
        );
        let f = OpenOptions::new().write(true).open(path).map_err(|e| io_err(path, e))?;
        f.set_len(valid_bytes).map_err(|e| io_err(path, e))?;
    }
    if cursor.n > n_max {
        return Ok(());
    }
    let mut cache_file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| io_err(path, e))?;
    let mut skip = partial.len();
    gram_det_table_resume(n_max, &seed, |r| {
        if skip > 0 {
            skip -= 1;
            return Ok(());
        }
        let line = Record::from_result(&r).to_line();
        let wrap = |e: std::io::Error| brauer_core::Error::Precondition(e.to_string());
        cache_file.write_all(line.as_bytes()).map_err(wrap)?;
        sink.write_all(line.as_bytes()).map_err(wrap)
    })?;
    cache_file.flush().map_err(|e| io_err(path, e))?;
    Ok(())
}
