use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::merge::neat_merge_in_place_by;
use crate::SortStats;

/// Double-ended sorted lists built by first-fit: each element goes to the
/// head of the first list whose head is greater than it, or to the tail of
/// the first list whose tail is smaller than it, or else starts a new list.
///
/// Every list's key range lies inside the range of the list created before
/// it, so "the element falls inside list `j`" holds for a prefix of lists and
/// the first fit is found by binary search.
#[derive(Debug, Clone)]
pub struct EncroachingLists<T> {
    pub lists: Vec<VecDeque<T>>,
}

impl<T> EncroachingLists<T> {
    pub fn distribute_by<I, F>(items: I, cmp: &mut F, stats: &mut SortStats) -> Self
    where
        I: IntoIterator<Item = T>,
        F: FnMut(&T, &T) -> Ordering,
    {
        let mut lists: Vec<VecDeque<T>> = Vec::new();
        for x in items {
            // First list that does not enclose x.
            let (mut lo, mut hi) = (0, lists.len());
            let mut at_head = false;
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                let list = &lists[mid];
                let below = stats.less(cmp, &x, list.front().unwrap());
                if below || stats.less(cmp, list.back().unwrap(), &x) {
                    hi = mid;
                    at_head = below;
                } else {
                    lo = mid + 1;
                }
            }
            stats.moves += 1;
            if lo == lists.len() {
                lists.push(VecDeque::from([x]));
            } else {
                // `at_head` belongs to the last probe that moved `hi`, which
                // is the probe at `lo`.
                if at_head {
                    lists[lo].push_front(x);
                } else {
                    lists[lo].push_back(x);
                }
            }
        }
        EncroachingLists { lists }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

pub fn melsort<T: Ord + Clone>(buf: &mut [T]) -> SortStats {
    melsort_by(buf, T::cmp)
}

/// Melsort: distribute into encroaching lists, then merge them. With an odd
/// number of lists the last is first folded into its predecessor; then list
/// `i` is merged with list `count / 2 + i` and the count halves.
pub fn melsort_by<T, F>(buf: &mut [T], mut cmp: F) -> SortStats
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut stats = SortStats::default();
    if buf.len() < 2 {
        return stats;
    }
    let enc = EncroachingLists::distribute_by(buf.iter().cloned(), &mut cmp, &mut stats);
    stats.runs_detected = enc.len() as u64;
    stats.note_aux(buf.len());

    let mut lists: Vec<Vec<T>> = enc.lists.into_iter().map(Vec::from).collect();
    let mut scratch = Vec::new();
    while lists.len() > 1 {
        if lists.len() % 2 == 1 {
            let last = lists.pop().unwrap();
            let prev = lists.pop().unwrap();
            lists.push(merge_two(prev, last, &mut scratch, &mut cmp, &mut stats));
        }
        let half = lists.len() / 2;
        let upper = lists.split_off(half);
        lists = lists
            .into_iter()
            .zip(upper)
            .map(|(a, b)| merge_two(a, b, &mut scratch, &mut cmp, &mut stats))
            .collect();
        stats.merge_passes += 1;
    }

    let sorted = lists.pop().unwrap_or_default();
    buf.clone_from_slice(&sorted);
    stats.moves += buf.len() as u64;
    stats
}

fn merge_two<T: Clone, F>(
    mut a: Vec<T>,
    b: Vec<T>,
    scratch: &mut Vec<T>,
    cmp: &mut F,
    stats: &mut SortStats,
) -> Vec<T>
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mid = a.len();
    stats.moves += b.len() as u64;
    a.extend(b);
    neat_merge_in_place_by(&mut a, mid, scratch, cmp, stats);
    a
}
