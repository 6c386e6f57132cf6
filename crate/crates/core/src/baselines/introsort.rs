use core::cmp::Ordering;

use super::insertion_sort_by;
use super::quicksort::partition;
use crate::SortStats;

const INSERTION_THRESHOLD: usize = 16;

/// Introspective sort: median-of-three quicksort that falls back to heapsort
/// once the recursion depth exceeds `2 * floor(log2 n)`, finishing slices
/// shorter than 16 with insertion sort. Not stable.
pub fn introsort_hybrid<T: Ord>(buf: &mut [T]) -> SortStats {
    introsort_hybrid_by(buf, T::cmp)
}

pub fn introsort_hybrid_by<T, F>(buf: &mut [T], mut cmp: F) -> SortStats
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut stats = SortStats::default();
    if buf.len() < 2 {
        return stats;
    }
    let limit = 2 * buf.len().ilog2();
    intro(buf, limit, &mut cmp, &mut stats);
    stats
}

fn intro<T, F>(mut v: &mut [T], mut depth: u32, cmp: &mut F, stats: &mut SortStats)
where
    F: FnMut(&T, &T) -> Ordering,
{
    loop {
        if v.len() < INSERTION_THRESHOLD {
            insertion_sort_by(v, cmp, stats);
            return;
        }
        if depth == 0 {
            heapsort(v, cmp, stats);
            return;
        }
        depth -= 1;
        let pivot = median_of_three(v, cmp, stats);
        let mid = partition(v, pivot, cmp, stats);
        let (lo, rest) = v.split_at_mut(mid);
        let hi = &mut rest[1..];
        if lo.len() < hi.len() {
            intro(lo, depth, cmp, stats);
            v = hi;
        } else {
            intro(hi, depth, cmp, stats);
            v = lo;
        }
    }
}

fn median_of_three<T, F>(v: &[T], cmp: &mut F, stats: &mut SortStats) -> usize
where
    F: FnMut(&T, &T) -> Ordering,
{
    let (a, b, c) = (0, v.len() / 2, v.len() - 1);
    let ab = stats.less(cmp, &v[a], &v[b]);
    let bc = stats.less(cmp, &v[b], &v[c]);
    if ab == bc {
        return b;
    }
    let ac = stats.less(cmp, &v[a], &v[c]);
    if ab == ac {
        c
    } else {
        a
    }
}

fn heapsort<T, F>(v: &mut [T], cmp: &mut F, stats: &mut SortStats)
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = v.len();
    for root in (0..n / 2).rev() {
        sift_down(v, root, n, cmp, stats);
    }
    for end in (1..n).rev() {
        stats.swap(v, 0, end);
        sift_down(v, 0, end, cmp, stats);
    }
}

fn sift_down<T, F>(v: &mut [T], mut node: usize, end: usize, cmp: &mut F, stats: &mut SortStats)
where
    F: FnMut(&T, &T) -> Ordering,
{
    loop {
        let mut child = 2 * node + 1;
        if child >= end {
            return;
        }
        if child + 1 < end && stats.less(cmp, &v[child], &v[child + 1]) {
            child += 1;
        }
        if !stats.less(cmp, &v[node], &v[child]) {
            return;
        }
        stats.swap(v, node, child);
        node = child;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn small_cases() {
        let mut v = [3, 1, 2];
        introsort_hybrid(&mut v);
        assert_eq!(v, [1, 2, 3]);
    }

    #[test]
    fn heapsort_fallback_sorts() {
        let mut v: Vec<i64> = (0..500).map(|i| (i * 7919) % 503).collect();
        let mut s = SortStats::default();
        heapsort(&mut v, &mut i64::cmp, &mut s);
        assert!(v.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn deterministic() {
        let input: Vec<u32> = (0..5000u32).map(|i| i.wrapping_mul(2654435761) >> 7).collect();
        let mut a = input.clone();
        let mut b = input;
        assert_eq!(introsort_hybrid(&mut a), introsort_hybrid(&mut b));
    }

    proptest::proptest! {
        #[test]
        fn sorts(mut v in proptest::collection::vec(0u16..50, 0..600)) {
            let mut want = v.clone();
            want.sort();
            introsort_hybrid(&mut v);
            proptest::prop_assert_eq!(v, want);
        }
    }
}
