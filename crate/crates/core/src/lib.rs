//! NeatSort: a natural-run mergesort that detects ascending and strictly
//! descending runs in one linear pass and then merges adjacent runs with a
//! merging-point procedure, together with the pieces needed to study it:
//! instrumented baseline sorts, eleven presortedness measures and seeded
//! generators of inputs with controlled disorder.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing and the
//! command-line harness live in the `neatsort-bench` crate.
//!
//! ```
//! use neatsort_core::{neat_sort, MergePolicy};
//!
//! let mut v = [1, 8, 4, 3, 7, 6, 2, 5, 10];
//! let stats = neat_sort(&mut v, &MergePolicy::default());
//! assert_eq!(v, [1, 2, 3, 4, 5, 6, 7, 8, 10]);
//! assert_eq!(stats.runs_detected, 4);
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod baselines;
mod element;
pub mod generators;
pub mod merge;
pub mod metrics;
pub mod runs;
pub mod schedule;
mod sort;
mod stats;

pub use element::Element;
pub use merge::{
    binary_search_first_greater, binary_search_first_greater_by, compute_merging_points,
    compute_merging_points_by, neat_merge, neat_merge_by, neat_merge_in_place_by, MergingPoints,
};
pub use runs::{detect_runs, detect_runs_by, Run, RunPartition};
pub use schedule::{schedule_pass, MergeMode, MergePolicy, PassItem, PolicyError};
pub use sort::{merge_pass_by, neat_sort, neat_sort_by};
pub use stats::SortStats;
