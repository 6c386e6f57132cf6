//! Reference sorts used as comparison points, instrumented the same way as
//! NeatSort.

mod introsort;
mod melsort;
mod mergesort;
mod quicksort;

pub use introsort::{introsort_hybrid, introsort_hybrid_by};
pub use melsort::{melsort, melsort_by, EncroachingLists};
pub use mergesort::{merge_sort, merge_sort_by};
pub use quicksort::{quicksort_random, quicksort_random_by};

#[inline]
pub(crate) fn insertion_sort_by<T, F>(v: &mut [T], cmp: &mut F, stats: &mut crate::SortStats)
where
    F: FnMut(&T, &T) -> core::cmp::Ordering,
{
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && stats.less(cmp, &v[j], &v[j - 1]) {
            stats.swap(v, j, j - 1);
            j -= 1;
        }
    }
}
