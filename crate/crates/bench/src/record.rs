//! CSV rows written by the harness.
//!
//! Trial file columns:
//! `algo,n,family,target_pct,seed,trial,comparisons,moves,elapsed_ns,inv_pct,runs_pct,maxdist_pct`
//!
//! Summary file columns:
//! `algo,n,family,target_pct,median_ms,mean_ms,median_comparisons,rel_perf_pct`
//!
//! Optional values are written as empty cells.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use neatsort_core::generators::Family;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::{Algorithm, BenchError};

/// One timed sort of one input by one algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algo: Algorithm,
    pub n: u64,
    pub family: Family,
    pub target_pct: Option<f64>,
    pub seed: u64,
    pub trial: u32,
    pub comparisons: u64,
    pub moves: u64,
    pub elapsed_ns: u64,
    pub inv_pct: f64,
    pub runs_pct: f64,
    pub maxdist_pct: f64,
}

/// Condensed trials of one (algorithm, n, family, target) cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub algo: Algorithm,
    pub n: u64,
    pub family: Family,
    pub target_pct: Option<f64>,
    pub median_ms: f64,
    pub mean_ms: f64,
    pub median_comparisons: u64,
    /// Against the baseline algorithm's median; empty when the baseline did
    /// not run in this cell.
    pub rel_perf_pct: Option<f64>,
}

pub fn write_csv<W: Write, R: Serialize>(writer: W, rows: &[R]) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<Rd: Read, R: DeserializeOwned>(reader: Rd) -> Result<Vec<R>, BenchError> {
    let mut r = csv::Reader::from_reader(reader);
    r.deserialize().map(|row| row.map_err(BenchError::from)).collect()
}

pub fn write_csv_file<R: Serialize>(path: &Path, rows: &[R]) -> Result<(), BenchError> {
    let file = std::fs::File::create(path).map_err(|source| BenchError::Io {
        path: path.to_owned(),
        source,
    })?;
    write_csv(std::io::BufWriter::new(file), rows)
}

pub fn read_csv_file<R: DeserializeOwned>(path: &Path) -> Result<Vec<R>, BenchError> {
    let file = std::fs::File::open(path).map_err(|source| BenchError::Io {
        path: path.to_owned(),
        source,
    })?;
    read_csv(std::io::BufReader::new(file))
}

/// `results.csv` -> `results_summary.csv`.
pub fn summary_path(trials: &Path) -> PathBuf {
    let stem = trials
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match trials.extension() {
        Some(ext) => format!("{stem}_summary.{}", ext.to_string_lossy()),
        None => format!("{stem}_summary.csv"),
    };
    trials.with_file_name(name)
}
