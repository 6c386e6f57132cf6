//! Regional insertion cost.
//!
//! For the element at 1-based position `i`:
//!
//! * `d_i` is one more than the number of earlier elements strictly between
//!   `x_{i-1}` and `x_i`, the distance from the previous insertion point;
//! * `t_i` is the smallest `j >= 1` such that no earlier element lies
//!   strictly between `x_{i-j}` and `x_i`, i.e. how far back the most recent
//!   sorted neighbour of `x_i` was inserted;
//! * `r_i = min(t_i - 1 + d_i, i - t_i)`.
//!
//! With this convention every `r_i` is 1 on sorted input.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::ranks;

/// Per-position values, 0-based. Position 0 holds `d = 1, t = 0, r = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegTrace {
    pub d: Vec<u64>,
    pub t: Vec<u64>,
    pub r: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegValue {
    /// `sum over i >= 2 of log2(r_i + 1)`.
    pub log_reg: f64,
    /// `product over i >= 2 of (r_i - 1)`, saturating; 0 for `n <= 1`.
    pub reg_paper: u64,
    pub trace: RegTrace,
}

struct Fenwick(Vec<u32>);

impl Fenwick {
    fn add(&mut self, mut i: usize) {
        i += 1;
        while i < self.0.len() {
            self.0[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Number of inserted values `< i`.
    fn below(&self, mut i: usize) -> u64 {
        let mut s = 0u64;
        while i > 0 {
            s += self.0[i] as u64;
            i &= i - 1;
        }
        s
    }
}

pub fn reg<K: Ord>(keys: &[K]) -> RegValue {
    let r = ranks(keys);
    let trace = reg_trace(&r);
    let log_reg = trace
        .r
        .iter()
        .skip(1)
        .map(|&ri| libm::log2(ri.max(1) as f64 + 1.0))
        .sum();
    let reg_paper = if r.len() <= 1 {
        0
    } else {
        trace
            .r
            .iter()
            .skip(1)
            .fold(1u64, |acc, &ri| acc.saturating_mul(ri - 1))
    };
    RegValue {
        log_reg,
        reg_paper,
        trace,
    }
}

pub(crate) fn reg_trace(r: &[usize]) -> RegTrace {
    let n = r.len();
    let mut trace = RegTrace {
        d: vec![1; n],
        t: vec![0; n],
        r: vec![1; n],
    };
    let mut counts = Fenwick(vec![0; n + 1]);
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();

    for p in 0..n {
        if p > 0 {
            let (lo, hi) = (r[p - 1].min(r[p]), r[p - 1].max(r[p]));
            let d = counts.below(hi) - counts.below(lo + 1) + 1;
            let pred = seen.range(..r[p]).next_back().map(|(_, &pos)| pos);
            let succ = seen.range(r[p] + 1..).next().map(|(_, &pos)| pos);
            let recent = pred.max(succ).expect("prefix is non-empty");
            let t = (p - recent) as u64;
            let i = p as u64 + 1;
            trace.d[p] = d;
            trace.t[p] = t;
            trace.r[p] = (t - 1 + d).min(i - t);
        }
        counts.add(r[p]);
        seen.insert(r[p], p);
    }
    trace
}
