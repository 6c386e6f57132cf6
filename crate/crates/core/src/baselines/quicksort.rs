use core::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::SortStats;

/// Quicksort with a pivot drawn uniformly from each partition range by a
/// seeded generator. Hoare partitioning; the smaller side is handled by
/// recursion and the larger by the loop, so the stack stays logarithmic.
/// Not stable.
pub fn quicksort_random<T: Ord>(buf: &mut [T], seed: u64) -> SortStats {
    quicksort_random_by(buf, seed, T::cmp)
}

pub fn quicksort_random_by<T, F>(buf: &mut [T], seed: u64, mut cmp: F) -> SortStats
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut stats = SortStats::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sort(buf, &mut rng, &mut cmp, &mut stats);
    stats
}

fn sort<T, F>(mut v: &mut [T], rng: &mut ChaCha8Rng, cmp: &mut F, stats: &mut SortStats)
where
    F: FnMut(&T, &T) -> Ordering,
{
    while v.len() > 1 {
        let pivot = rng.gen_range(0..v.len());
        let mid = partition(v, pivot, cmp, stats);
        let (lo, rest) = v.split_at_mut(mid);
        let hi = &mut rest[1..];
        if lo.len() < hi.len() {
            sort(lo, rng, cmp, stats);
            v = hi;
        } else {
            sort(hi, rng, cmp, stats);
            v = lo;
        }
    }
}

/// Hoare partition around `v[pivot]`. Returns the final index `m` of the
/// pivot: `v[..m] <= v[m] <= v[m + 1..]`.
pub(crate) fn partition<T, F>(v: &mut [T], pivot: usize, cmp: &mut F, stats: &mut SortStats) -> usize
where
    F: FnMut(&T, &T) -> Ordering,
{
    stats.swap(v, 0, pivot);
    let (mut i, mut j) = (0usize, v.len());
    loop {
        // v[0] is the pivot and stops the first scan; afterwards the swapped
        // elements act as sentinels.
        loop {
            i += 1;
            if i >= v.len() || !stats.less(cmp, &v[i], &v[0]) {
                break;
            }
        }
        loop {
            j -= 1;
            if !stats.less(cmp, &v[0], &v[j]) {
                break;
            }
        }
        if i >= j {
            break;
        }
        stats.swap(v, i, j);
    }
    // v[j] <= pivot; put the pivot in its final place.
    stats.swap(v, 0, j);
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn small_cases() {
        let mut v = [3, 1, 2];
        quicksort_random(&mut v, 1);
        assert_eq!(v, [1, 2, 3]);
        let mut all_equal = [5; 40];
        quicksort_random(&mut all_equal, 9);
        assert_eq!(all_equal, [5; 40]);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let input: Vec<u32> = (0..2000u32).map(|i| i.wrapping_mul(2654435761) % 1000).collect();
        let mut a = input.clone();
        let mut b = input;
        assert_eq!(quicksort_random(&mut a, 42), quicksort_random(&mut b, 42));
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] <= w[1]));
    }

    proptest::proptest! {
        #[test]
        fn sorts(mut v in proptest::collection::vec(0u8..20, 0..300), seed: u64) {
            let mut want = v.clone();
            want.sort();
            quicksort_random(&mut v, seed);
            proptest::prop_assert_eq!(v, want);
        }
    }
}
