use std::fmt;
use std::str::FromStr;

use neatsort_core::baselines::{introsort_hybrid_by, melsort_by, merge_sort_by, quicksort_random_by};
use neatsort_core::{neat_sort_by, Element, MergePolicy, SortStats};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    NeatSort,
    MergeSort,
    QuickSort,
    IntroSort,
    MelSort,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::NeatSort,
        Algorithm::MergeSort,
        Algorithm::QuickSort,
        Algorithm::IntroSort,
        Algorithm::MelSort,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::NeatSort => "neatsort",
            Algorithm::MergeSort => "mergesort",
            Algorithm::QuickSort => "quicksort",
            Algorithm::IntroSort => "introsort",
            Algorithm::MelSort => "melsort",
        }
    }

    /// Sorts `buf` by key. `seed` only matters for the random quicksort.
    pub fn run<K: Ord + Clone>(
        self,
        buf: &mut [Element<K>],
        policy: &MergePolicy,
        seed: u64,
    ) -> SortStats {
        let cmp = |a: &Element<K>, b: &Element<K>| a.key.cmp(&b.key);
        match self {
            Algorithm::NeatSort => neat_sort_by(buf, policy, cmp),
            Algorithm::MergeSort => merge_sort_by(buf, cmp),
            Algorithm::QuickSort => quicksort_random_by(buf, seed, cmp),
            Algorithm::IntroSort => introsort_hybrid_by(buf, cmp),
            Algorithm::MelSort => melsort_by(buf, cmp),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown algorithm {s:?} (expected one of neatsort, mergesort, quicksort, introsort, melsort)"
                )
            })
    }
}
