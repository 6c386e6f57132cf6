use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::SortStats;

/// Top-down mergesort: split in halves down to single elements, then merge
/// back through an auxiliary buffer of size `n`. Stable.
pub fn merge_sort<T: Ord + Clone>(buf: &mut [T]) -> SortStats {
    merge_sort_by(buf, T::cmp)
}

pub fn merge_sort_by<T, F>(buf: &mut [T], mut cmp: F) -> SortStats
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut stats = SortStats::default();
    if buf.len() < 2 {
        return stats;
    }
    let mut aux: Vec<T> = buf.to_vec();
    stats.note_aux(aux.len());
    split_merge(buf, &mut aux, &mut cmp, &mut stats);
    stats
}

fn split_merge<T: Clone, F>(buf: &mut [T], aux: &mut [T], cmp: &mut F, stats: &mut SortStats)
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = buf.len();
    if n < 2 {
        return;
    }
    let mid = n / 2;
    split_merge(&mut buf[..mid], &mut aux[..mid], cmp, stats);
    split_merge(&mut buf[mid..], &mut aux[mid..], cmp, stats);

    aux[..n].clone_from_slice(buf);
    stats.moves += n as u64;
    let (mut i, mut j) = (0, mid);
    for slot in buf.iter_mut() {
        let take_right = i == mid || (j < n && stats.less(cmp, &aux[j], &aux[i]));
        if take_right {
            *slot = aux[j].clone();
            j += 1;
        } else {
            *slot = aux[i].clone();
            i += 1;
        }
    }
    stats.moves += n as u64;
}
