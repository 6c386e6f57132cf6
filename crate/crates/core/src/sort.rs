use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::merge::neat_merge_in_place_by;
use crate::runs::{detect_runs_by, Run};
use crate::schedule::{schedule_pass, MergePolicy, PassItem};
use crate::SortStats;

/// Sorts `buf` stably with NeatSort and returns the collected counters.
pub fn neat_sort<T: Ord + Clone>(buf: &mut [T], policy: &MergePolicy) -> SortStats {
    neat_sort_by(buf, policy, T::cmp)
}

pub fn neat_sort_by<T, F>(buf: &mut [T], policy: &MergePolicy, mut cmp: F) -> SortStats
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut stats = SortStats::default();
    if buf.len() < 2 {
        stats.runs_detected = buf.len() as u64;
        return stats;
    }

    let mut runs = detect_runs_by(buf, &mut cmp, &mut stats).runs;
    let mut scratch = Vec::new();
    while runs.len() > 1 {
        runs = merge_pass_by(buf, &runs, policy, &mut scratch, &mut cmp, &mut stats);
    }
    stats
}

/// Runs one scheduled merge pass over `runs` and returns the surviving runs.
pub fn merge_pass_by<T, F>(
    buf: &mut [T],
    runs: &[Run],
    policy: &MergePolicy,
    scratch: &mut Vec<T>,
    cmp: &mut F,
    stats: &mut SortStats,
) -> Vec<Run>
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let lengths: Vec<usize> = runs.iter().map(Run::len).collect();
    let plan = schedule_pass(&lengths, policy);
    let mut next = Vec::with_capacity(plan.len());
    for item in plan {
        match item {
            PassItem::Keep(i) => next.push(runs[i]),
            PassItem::Merge { left } => {
                let (a, b) = (runs[left], runs[left + 1]);
                debug_assert_eq!(a.end, b.start);
                neat_merge_in_place_by(&mut buf[a.start..b.end], a.len(), scratch, cmp, stats);
                next.push(Run::new(a.start, b.end));
            }
        }
    }
    stats.merge_passes += 1;
    next
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::MergeMode;
    use crate::{Element, RunPartition};
    use proptest::prelude::*;

    const MODES: [MergeMode; 4] = [
        MergeMode::AdjacentPairs,
        MergeMode::LeftmostAlways,
        MergeMode::LeaveOutLongest,
        MergeMode::TripleP,
    ];

    #[test]
    fn worked_example() {
        for mode in MODES {
            let mut v = [1, 8, 4, 3, 7, 6, 2, 5, 10];
            let s = neat_sort(&mut v, &MergePolicy::with_mode(mode));
            assert_eq!(v, [1, 2, 3, 4, 5, 6, 7, 8, 10]);
            assert_eq!(s.runs_detected, 4);
        }
    }

    #[test]
    fn sorted_and_reversed_extremes() {
        let mut v: Vec<u32> = (0..1000).collect();
        let s = neat_sort(&mut v, &MergePolicy::default());
        assert_eq!(s.comparisons, 999);
        assert_eq!(s.runs_detected, 1);
        assert_eq!(s.merge_passes, 0);

        let mut v: Vec<u32> = (0..1000).rev().collect();
        let s = neat_sort(&mut v, &MergePolicy::default());
        assert!(v.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(s.runs_detected, 1);
        assert!(s.comparisons <= 1000);
    }

    #[test]
    fn empty_and_single() {
        let mut e: [u8; 0] = [];
        assert_eq!(neat_sort(&mut e, &MergePolicy::default()), SortStats::default());
        let mut one = [3u8];
        let s = neat_sort(&mut one, &MergePolicy::default());
        assert_eq!(s.comparisons, 0);
    }

    fn mode() -> impl Strategy<Value = MergeMode> {
        proptest::sample::select(MODES.to_vec())
    }

    proptest! {
        #[test]
        fn matches_stable_reference(keys in proptest::collection::vec(0u16..30, 0..300), mode in mode()) {
            let mut v = Element::tagged(&keys);
            let mut want = v.clone();
            want.sort_by(Element::cmp_key);
            let s = neat_sort_by(&mut v, &MergePolicy::with_mode(mode), Element::cmp_key);
            prop_assert_eq!(&v, &want);
            prop_assert!(s.aux_peak <= keys.len() as u64);
        }

        #[test]
        fn passes_preserve_partition_and_bound_comparisons(
            keys in proptest::collection::vec(0u32..1000, 2..400),
            mode in mode(),
        ) {
            let mut v = keys.clone();
            let n = v.len();
            let policy = MergePolicy::with_mode(mode);
            let mut stats = SortStats::default();
            let mut runs = detect_runs_by(&mut v, &mut u32::cmp, &mut stats).runs;
            let mut scratch = Vec::new();
            let log_n = n.next_power_of_two().trailing_zeros() as u64;
            while runs.len() > 1 {
                let before = stats.comparisons;
                let next = merge_pass_by(&mut v, &runs, &policy, &mut scratch, &mut u32::cmp, &mut stats);
                let merges = (runs.len() - next.len()) as u64;
                prop_assert!(stats.comparisons - before <= n as u64 + merges * log_n);
                let part = RunPartition { runs: next.clone() };
                prop_assert!(part.is_valid_for(&v, u32::cmp));
                runs = next;
            }
        }
    }
}
