//! Benchmark harness, CSV formats and command-line front end for
//! `neatsort-core`.
//!
//! A suite generates one fresh input per trial, lets every selected
//! algorithm sort its own copy, times only the sort call, checks the output
//! and finally condenses the trials into per-cell medians and means.

pub mod algo;
pub mod cli;
pub mod error;
pub mod record;
pub mod suite;

pub use algo::Algorithm;
pub use error::BenchError;
pub use record::{BenchRecord, SummaryRecord};
pub use suite::{
    default_trial_count, median, relative_performance, run_suite, summarize, BenchConfig,
    SuiteOutput, Trials,
};
