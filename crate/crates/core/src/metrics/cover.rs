//! Measures built on monotone subsequences.

use alloc::vec::Vec;

use super::ranks;

/// Inputs up to this length get an exact SMS by exhaustive search.
pub const SMS_EXACT_LIMIT: usize = 9;

/// Length of a longest strictly increasing subsequence (patience piles).
fn lis(r: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in r {
        let k = tails.partition_point(|&t| t < x);
        if k == tails.len() {
            tails.push(x);
        } else {
            tails[k] = x;
        }
    }
    tails.len()
}

/// Elements to remove to leave a sorted subsequence: `n - LIS`.
pub fn rem<K: Ord>(keys: &[K]) -> u64 {
    rem_ranked(&ranks(keys))
}

pub(crate) fn rem_ranked(r: &[usize]) -> u64 {
    (r.len() - lis(r)) as u64
}

/// Number of step-downs `x_i > x_{i+1}`.
pub fn runs<K: Ord>(keys: &[K]) -> u64 {
    keys.windows(2).filter(|w| w[0] > w[1]).count() as u64
}

/// Minimum number of ascending subsequences covering the input.
///
/// Greedy: each element extends the ascending pile with the largest tail
/// below it, or opens a new pile. The pile count equals the length of a
/// longest decreasing subsequence, which is the optimum.
pub fn sus<K: Ord>(keys: &[K]) -> u64 {
    sus_ranked(&ranks(keys))
}

pub(crate) fn sus_ranked(r: &[usize]) -> u64 {
    // Pile tails, kept strictly decreasing.
    let mut tails: Vec<usize> = Vec::new();
    for &x in r {
        let k = tails.partition_point(|&t| t > x);
        if k == tails.len() {
            tails.push(x);
        } else {
            tails[k] = x;
        }
    }
    tails.len() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmsValue {
    pub value: u64,
    pub exact: bool,
}

/// Minimum number of monotone (ascending or descending) subsequences
/// covering the input. Exact up to [`SMS_EXACT_LIMIT`] elements, otherwise
/// the better of two greedy bounds: repeatedly peeling off a longest
/// monotone subsequence, or the SUS cover.
pub fn sms<K: Ord>(keys: &[K]) -> SmsValue {
    let r = ranks(keys);
    if r.len() <= SMS_EXACT_LIMIT {
        SmsValue {
            value: sms_exact(&r),
            exact: true,
        }
    } else {
        SmsValue {
            value: sms_greedy(&r),
            exact: false,
        }
    }
}

pub(crate) fn sms_greedy(r: &[usize]) -> u64 {
    let mut rest = r.to_vec();
    let mut count = 0;
    while !rest.is_empty() {
        let up = longest_monotone(&rest, false);
        let down = longest_monotone(&rest, true);
        let take = if down.len() > up.len() { down } else { up };
        let mut drop = take.into_iter().peekable();
        let mut i = 0;
        rest.retain(|_| {
            let keep = drop.peek() != Some(&i);
            if !keep {
                drop.next();
            }
            i += 1;
            keep
        });
        count += 1;
    }
    // An ascending cover is also a monotone cover.
    count.min(sus_ranked(r))
}

/// Positions of one longest strictly monotone subsequence.
fn longest_monotone(r: &[usize], descending: bool) -> Vec<usize> {
    let key = |x: usize| if descending { usize::MAX - x } else { x };
    let mut tails: Vec<usize> = Vec::new(); // positions
    let mut prev: Vec<Option<usize>> = alloc::vec![None; r.len()];
    for i in 0..r.len() {
        let k = tails.partition_point(|&t| key(r[t]) < key(r[i]));
        prev[i] = k.checked_sub(1).map(|p| tails[p]);
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = prev[i];
    }
    out.reverse();
    out
}

#[derive(Clone, Copy)]
enum Dir {
    Open,
    Up,
    Down,
}

pub(crate) fn sms_exact(r: &[usize]) -> u64 {
    let mut best = sms_greedy(r);
    let mut open: Vec<(usize, Dir)> = Vec::new();
    search(r, 0, &mut open, &mut best);
    best
}

fn search(r: &[usize], i: usize, open: &mut Vec<(usize, Dir)>, best: &mut u64) {
    if open.len() as u64 >= *best {
        return;
    }
    if i == r.len() {
        *best = open.len() as u64;
        return;
    }
    let x = r[i];
    for s in 0..open.len() {
        let (last, dir) = open[s];
        let next = match dir {
            Dir::Open if x > last => Dir::Up,
            Dir::Open => Dir::Down,
            Dir::Up if x > last => Dir::Up,
            Dir::Down if x < last => Dir::Down,
            _ => continue,
        };
        open[s] = (x, next);
        search(r, i + 1, open, best);
        open[s] = (last, dir);
    }
    open.push((x, Dir::Open));
    search(r, i + 1, open, best);
    open.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::tests::S1;

    #[test]
    fn s1_values() {
        assert_eq!(rem(&S1), 5);
        assert_eq!(runs(&S1), 4);
        assert_eq!(sus(&S1), 4);
        assert_eq!(sms(&S1), SmsValue { value: 3, exact: true });
    }

    #[test]
    fn edge_cases() {
        let sorted: Vec<i32> = (0..12).collect();
        let reversed: Vec<i32> = (0..6).rev().collect();
        assert_eq!((rem(&sorted), runs(&sorted), sus(&sorted)), (0, 0, 1));
        assert_eq!(sms(&sorted).value, 1);
        assert_eq!(rem(&reversed), 5);
        assert_eq!(runs(&reversed), 5);
        assert_eq!(sus(&[5, 4, 3, 2, 1]), 5);
        assert_eq!(sms(&[3, 2, 1, 6, 5, 4]).value, 2);
        assert_eq!(sms::<i32>(&[]), SmsValue { value: 0, exact: true });
    }

    #[test]
    fn equal_keys_are_not_step_downs() {
        assert_eq!(runs(&[2, 2, 2]), 0);
        assert_eq!(sus(&[2, 2, 2]), 1);
    }

    #[test]
    fn long_inputs_are_flagged_as_bounds() {
        let v: Vec<i32> = (0..30).map(|i| (i * 7) % 30).collect();
        let s = sms(&v);
        assert!(!s.exact);
        assert!(s.value >= 1 && s.value <= sus(&v));
    }
}
