//! Merging two adjacent nondecreasing runs.
//!
//! When the head of the right run is smaller than the tail of the left run,
//! the stable merge of `L` and `R` is a concatenation of alternating slices
//!
//! ```text
//! L[0..j0], R[k0..k1], L[j0..j1], R[k1..k2], L[j1..j2], ...
//! ```
//!
//! where the merging points satisfy, with `R[|R|] = +inf`,
//!
//! ```text
//! L[j_i - 1] <= R[k_i]     <  L[j_i]
//! R[k_{i+1} - 1] < L[j_i]  <= R[k_{i+1}]
//! ```
//!
//! `j0` is found by binary search, the rest by a linear scan. `neat_merge`
//! walks the same alternation without materialising the points: the prefix
//! `L[0..j0]` never moves, the suffix `L[j0..]` is copied to a scratch buffer
//! and the output is written back over the storage of both runs.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::SortStats;

pub fn binary_search_first_greater<T: Ord>(
    seq: &[T],
    lo: usize,
    hi: usize,
    pivot: &T,
    stats: &mut SortStats,
) -> usize {
    binary_search_first_greater_by(seq, lo, hi, pivot, &mut T::cmp, stats)
}

/// Smallest `i` in `lo..=hi` with `seq[i] > pivot`, or `hi` if there is none.
/// `seq[lo..hi]` must be nondecreasing. Uses at most `ceil(log2(hi - lo)) + 1`
/// comparisons.
pub fn binary_search_first_greater_by<T, F>(
    seq: &[T],
    lo: usize,
    hi: usize,
    pivot: &T,
    cmp: &mut F,
    stats: &mut SortStats,
) -> usize
where
    F: FnMut(&T, &T) -> Ordering,
{
    assert!(lo <= hi && hi <= seq.len(), "invalid search range {lo}..{hi}");
    let (mut lo, mut hi) = (lo, hi);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if stats.less(cmp, pivot, &seq[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Merging points of a left run `L` and a right run `R`.
///
/// `j_seq[i]` indexes `L` and `k_seq[i]` indexes `R`; both end at the run
/// lengths. `j_seq[0]` may be 0 and the last two `j` values may coincide when
/// `L` is exhausted before `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergingPoints {
    pub j_seq: Vec<usize>,
    pub k_seq: Vec<usize>,
}

impl MergingPoints {
    /// Number of alternations `t`.
    pub fn steps(&self) -> usize {
        self.j_seq.len() - 1
    }

    /// Concatenates the slices in merge order.
    pub fn interleave<T: Clone>(&self, left: &[T], right: &[T]) -> Vec<T> {
        let mut out = Vec::with_capacity(left.len() + right.len());
        out.extend_from_slice(&left[..self.j_seq[0]]);
        for i in 0..self.steps() {
            out.extend_from_slice(&right[self.k_seq[i]..self.k_seq[i + 1]]);
            out.extend_from_slice(&left[self.j_seq[i]..self.j_seq[i + 1]]);
        }
        out
    }
}

pub fn compute_merging_points<T: Ord>(left: &[T], right: &[T]) -> MergingPoints {
    compute_merging_points_by(left, right, &mut T::cmp)
}

/// Computes the merging points of two nondecreasing runs. If the runs are
/// already in order (`R[0] >= L[last]`) the result is the trivial
/// `j = [|L|, |L|]`, `k = [0, |R|]`. Both runs must be non-empty.
pub fn compute_merging_points_by<T, F>(left: &[T], right: &[T], cmp: &mut F) -> MergingPoints
where
    F: FnMut(&T, &T) -> Ordering,
{
    assert!(!left.is_empty() && !right.is_empty(), "runs must be non-empty");
    debug_assert!(left.windows(2).all(|w| cmp(&w[0], &w[1]) != Ordering::Greater));
    debug_assert!(right.windows(2).all(|w| cmp(&w[0], &w[1]) != Ordering::Greater));

    let (nl, nr) = (left.len(), right.len());
    let mut scratch = SortStats::default();
    let j0 = binary_search_first_greater_by(left, 0, nl, &right[0], cmp, &mut scratch);
    let mut j_seq = alloc::vec![j0];
    let mut k_seq = alloc::vec![0];

    let (mut j, mut k) = (j0, 0);
    while j < nl {
        // First element of R not smaller than L[j].
        k += 1;
        while k < nr && cmp(&right[k], &left[j]) == Ordering::Less {
            k += 1;
        }
        if k == nr {
            j = nl;
        } else {
            // First element of L greater than R[k].
            j += 1;
            while j < nl && cmp(&left[j], &right[k]) != Ordering::Greater {
                j += 1;
            }
        }
        j_seq.push(j);
        k_seq.push(k);
    }
    if k < nr {
        // L ran out first; the rest of R closes the merge.
        j_seq.push(nl);
        k_seq.push(nr);
    }
    MergingPoints { j_seq, k_seq }
}

/// Stable merge of two nondecreasing runs into a new vector.
pub fn neat_merge<T: Ord + Clone>(left: &[T], right: &[T], stats: &mut SortStats) -> Vec<T> {
    neat_merge_by(left, right, &mut T::cmp, stats)
}

pub fn neat_merge_by<T, F>(left: &[T], right: &[T], cmp: &mut F, stats: &mut SortStats) -> Vec<T>
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut buf = Vec::with_capacity(left.len() + right.len());
    buf.extend_from_slice(left);
    buf.extend_from_slice(right);
    let mut scratch = Vec::new();
    neat_merge_in_place_by(&mut buf, left.len(), &mut scratch, cmp, stats);
    buf
}

/// Merges `buf[..mid]` and `buf[mid..]` in place, using `scratch` for the
/// part of the left run that follows the insertion point of `buf[mid]`.
/// Equal keys keep the left run first.
///
/// Comparisons are bounded by `ceil(log2 |L|) + |L| + |R|`.
pub fn neat_merge_in_place_by<T, F>(
    buf: &mut [T],
    mid: usize,
    scratch: &mut Vec<T>,
    cmp: &mut F,
    stats: &mut SortStats,
) where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let n = buf.len();
    if mid == 0 || mid >= n {
        return;
    }

    let j0 = {
        let (left, right) = buf.split_at(mid);
        binary_search_first_greater_by(left, 0, mid, &right[0], cmp, stats)
    };
    if j0 == mid {
        return;
    }

    scratch.clear();
    scratch.extend_from_slice(&buf[j0..mid]);
    let tlen = scratch.len();
    stats.moves += tlen as u64;
    stats.note_aux(tlen);

    // Invariant: w <= r, so writes never overtake unread right elements.
    let (mut w, mut t, mut r) = (j0, 0, mid);
    'outer: loop {
        // buf[r] < scratch[t] holds on entry.
        loop {
            buf[w] = buf[r].clone();
            stats.moves += 1;
            w += 1;
            r += 1;
            if r == n {
                break 'outer;
            }
            if !stats.less(cmp, &buf[r], &scratch[t]) {
                break;
            }
        }
        loop {
            buf[w] = scratch[t].clone();
            stats.moves += 1;
            w += 1;
            t += 1;
            if t == tlen {
                // The remaining right elements are already in place.
                return;
            }
            if stats.less(cmp, &buf[r], &scratch[t]) {
                break;
            }
        }
    }
    for x in &scratch[t..] {
        buf[w] = x.clone();
        w += 1;
    }
    stats.moves += (tlen - t) as u64;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Element;
    use alloc::vec;

    /// Reference stable merge: repeatedly take the left head unless the
    /// right head is strictly smaller.
    fn oracle_merge<T: Clone, F: FnMut(&T, &T) -> Ordering>(
        l: &[T],
        r: &[T],
        mut cmp: F,
    ) -> Vec<T> {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < l.len() || j < r.len() {
            if j == r.len() || (i < l.len() && cmp(&r[j], &l[i]) != Ordering::Less) {
                out.push(l[i].clone());
                i += 1;
            } else {
                out.push(r[j].clone());
                j += 1;
            }
        }
        out
    }

    #[test]
    fn search_examples() {
        let s = [1, 3, 5, 7];
        let mut st = SortStats::default();
        assert_eq!(binary_search_first_greater(&s, 0, 4, &4, &mut st), 2);
        assert_eq!(binary_search_first_greater(&s, 0, 4, &0, &mut st), 0);
        assert_eq!(binary_search_first_greater(&s, 0, 4, &9, &mut st), 4);
        assert_eq!(binary_search_first_greater(&[1, 8], 0, 1, &3, &mut st), 1);
        assert_eq!(binary_search_first_greater(&s, 2, 2, &0, &mut st), 2);
    }

    #[test]
    fn search_matches_linear_scan_within_bound() {
        for len in 0..40usize {
            let seq: Vec<i32> = (0..len as i32).map(|x| x / 3).collect();
            for lo in 0..=len {
                for hi in lo..=len {
                    for pivot in -1..=(len as i32 / 3 + 1) {
                        let mut st = SortStats::default();
                        let got = binary_search_first_greater(&seq, lo, hi, &pivot, &mut st);
                        let want = (lo..hi).find(|&i| seq[i] > pivot).unwrap_or(hi);
                        assert_eq!(got, want);
                        let size = hi - lo;
                        let bound = if size == 0 {
                            0
                        } else {
                            size.next_power_of_two().trailing_zeros() as u64 + 1
                        };
                        assert!(st.comparisons <= bound);
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn search_rejects_inverted_range() {
        let mut st = SortStats::default();
        binary_search_first_greater(&[1, 2], 2, 1, &0, &mut st);
    }

    #[test]
    fn merging_points_example() {
        let mp = compute_merging_points(&[1, 8], &[3, 4, 7]);
        assert_eq!(mp.j_seq, vec![1, 2]);
        assert_eq!(mp.k_seq, vec![0, 3]);
        assert_eq!(mp.interleave(&[1, 8], &[3, 4, 7]), vec![1, 3, 4, 7, 8]);

        let mp = compute_merging_points(&[1, 3, 5], &[2, 4, 6]);
        assert_eq!(mp.interleave(&[1, 3, 5], &[2, 4, 6]), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn merging_points_keep_left_first_on_ties() {
        let l = [Element::new(2, 0), Element::new(2, 1)];
        let r = [Element::new(1, 2)];
        let mp = compute_merging_points_by(&l, &r, &mut Element::cmp_key);
        let tags: Vec<u32> = mp.interleave(&l, &r).iter().map(|e| e.tag).collect();
        assert_eq!(tags, vec![2, 0, 1]);
    }

    #[test]
    fn merge_examples() {
        let mut st = SortStats::default();
        assert_eq!(neat_merge(&[1, 8], &[3, 4, 7], &mut st), vec![1, 3, 4, 7, 8]);

        let mut st = SortStats::default();
        assert_eq!(neat_merge(&[1, 2], &[3, 4], &mut st), vec![1, 2, 3, 4]);
        assert_eq!(st.moves, 0);

        let l = [Element::new(2, 0), Element::new(2, 1)];
        let r = [Element::new(2, 2)];
        let mut st = SortStats::default();
        let out = neat_merge_by(&l, &r, &mut Element::cmp_key, &mut st);
        assert_eq!(out.iter().map(|e| e.tag).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn merge_scratch_holds_left_suffix_only() {
        let mut buf = [1, 2, 3, 9, 10, 4, 5];
        let mut scratch = Vec::new();
        let mut st = SortStats::default();
        neat_merge_in_place_by(&mut buf, 5, &mut scratch, &mut i32::cmp, &mut st);
        assert_eq!(buf, [1, 2, 3, 4, 5, 9, 10]);
        assert_eq!(st.aux_peak, 2);
    }

    proptest::proptest! {
        #[test]
        fn merge_is_stable_and_bounded(
            mut l in proptest::collection::vec(0u8..12, 1..60),
            mut r in proptest::collection::vec(0u8..12, 1..60),
        ) {
            l.sort();
            r.sort();
            let lt: Vec<Element<u8>> = l.iter().enumerate().map(|(i, &k)| Element::new(k, i as u32)).collect();
            let rt: Vec<Element<u8>> = r.iter().enumerate().map(|(i, &k)| Element::new(k, 1000 + i as u32)).collect();
            let want = oracle_merge(&lt, &rt, Element::cmp_key);

            let mut st = SortStats::default();
            let got = neat_merge_by(&lt, &rt, &mut Element::cmp_key, &mut st);
            proptest::prop_assert_eq!(&got, &want);
            let log = lt.len().next_power_of_two().trailing_zeros() as u64;
            proptest::prop_assert!(st.comparisons <= log + (lt.len() + rt.len()) as u64);

            let mp = compute_merging_points_by(&lt, &rt, &mut Element::cmp_key);
            proptest::prop_assert_eq!(mp.interleave(&lt, &rt), want);
        }
    }
}
