use std::path::PathBuf;

use neatsort_core::generators::{GenError, GeneratorSpec};
use neatsort_core::PolicyError;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Policy(#[from] PolicyError),
    #[error(transparent)]
    Generator(#[from] GenError),
    /// `spec` is absent when the input came from a file.
    #[error("{algo} produced unsorted output (seed {seed}, spec {spec:?})")]
    Unsorted {
        algo: &'static str,
        seed: u64,
        spec: Option<GeneratorSpec>,
    },
    #[error("durations must be positive (baseline {baseline_ns} ns, subject {subject_ns} ns)")]
    NonPositiveDuration { baseline_ns: f64, subject_ns: f64 },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: line {line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl BenchError {
    /// Process exit code: 3 for a failed output check, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            BenchError::Unsorted { .. } => 3,
            _ => 2,
        }
    }
}
