//! Analysis phase: split the input into nondecreasing runs.
//!
//! A forward scan grows the current run while the next element is not
//! smaller than its predecessor. When that leaves a run of a single element,
//! the scan instead follows the strictly descending stretch that starts
//! there, reverses it in place and keeps extending the reversed run while
//! the next element is not smaller than its tail. A new run whose head is
//! not smaller than the tail of the previous run is fused with it, so the
//! stored partition always satisfies `head(next) < tail(prev)`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Range;

use crate::SortStats;

/// Half-open range `[start, end)` of a nondecreasing stretch of the buffer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub end: usize,
}

impl Run {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start < end);
        Run { start, end }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    #[inline]
    pub fn range(&self) -> Range<usize> {
        self.start..self.end
    }
}

/// Ordered runs covering `0..n` exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunPartition {
    pub runs: Vec<Run>,
}

impl RunPartition {
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.runs.iter().map(Run::len).collect()
    }

    /// Checks coverage of `0..buf.len()`, nondecreasing runs and
    /// `head(q + 1) < tail(q)` between neighbours. Uncounted; meant for tests
    /// and debug assertions.
    pub fn is_valid_for<T, F>(&self, buf: &[T], mut cmp: F) -> bool
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        let mut expect = 0;
        for (q, run) in self.runs.iter().enumerate() {
            if run.start != expect || run.start >= run.end || run.end > buf.len() {
                return false;
            }
            if buf[run.range()]
                .windows(2)
                .any(|w| cmp(&w[0], &w[1]) == Ordering::Greater)
            {
                return false;
            }
            if q > 0 && cmp(&buf[run.start], &buf[run.start - 1]) != Ordering::Less {
                return false;
            }
            expect = run.end;
        }
        expect == buf.len()
    }
}

pub fn detect_runs<T: Ord>(buf: &mut [T], stats: &mut SortStats) -> RunPartition {
    detect_runs_by(buf, &mut T::cmp, stats)
}

/// Runs the analysis phase over `buf`, reversing strictly descending
/// stretches in place. Adds to `stats.comparisons`, `stats.moves` (three per
/// reversal swap) and `stats.runs_detected`.
pub fn detect_runs_by<T, F>(buf: &mut [T], cmp: &mut F, stats: &mut SortStats) -> RunPartition
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = buf.len();
    let mut runs: Vec<Run> = Vec::new();
    let mut i = 0;

    while i < n {
        let start = i;
        i += 1;
        while i < n && !stats.less(cmp, &buf[i], &buf[i - 1]) {
            i += 1;
        }

        if i - start == 1 && i < n {
            // buf[start] > buf[start + 1] is already known from the failed
            // forward step.
            i += 1;
            while i < n && stats.less(cmp, &buf[i], &buf[i - 1]) {
                i += 1;
            }
            reverse(&mut buf[start..i], stats);
            // Extend against the tail of the reversed run, not against the
            // last element of the descending stretch.
            while i < n && !stats.less(cmp, &buf[i], &buf[i - 1]) {
                i += 1;
            }
        }

        match runs.last_mut() {
            Some(prev) if !stats.less(cmp, &buf[start], &buf[prev.end - 1]) => prev.end = i,
            _ => runs.push(Run::new(start, i)),
        }
    }

    stats.runs_detected += runs.len() as u64;
    RunPartition { runs }
}

fn reverse<T>(seg: &mut [T], stats: &mut SortStats) {
    let len = seg.len();
    for k in 0..len / 2 {
        stats.swap(seg, k, len - 1 - k);
    }
}
