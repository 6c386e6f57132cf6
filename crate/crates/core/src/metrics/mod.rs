//! Presortedness measures.
//!
//! Every measure is computed on the ranks of the input, with ties broken by
//! position, i.e. on the sequence of distinct pairs `(x_i, i)`. Order
//! isomorphic inputs therefore always get identical values.

mod cover;
mod displacement;
mod reg;

use alloc::vec::Vec;

pub use cover::{rem, runs, sms, sus, SmsValue, SMS_EXACT_LIMIT};
pub use displacement::{dis, exc, inv, max_disp};
pub use reg::{reg, RegTrace, RegValue};

use crate::baselines::EncroachingLists;
use crate::SortStats;

/// Rank of each position: `ranks[i]` is the index `x_i` takes in the stable
/// sorted order.
pub fn ranks<K: Ord>(keys: &[K]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = alloc::vec![0; keys.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    rank
}

/// Number of encroaching lists the Melsort distribution builds.
pub fn enc<K: Ord>(keys: &[K]) -> u64 {
    let r = ranks(keys);
    let mut stats = SortStats::default();
    EncroachingLists::distribute_by(r, &mut usize::cmp, &mut stats).len() as u64
}

/// Oscillation: over every adjacent pair `(x_j, x_{j+1})`, how many elements
/// lie strictly between the two. On ranks that is `|r_j - r_{j+1}| - 1`.
pub fn osc<K: Ord>(keys: &[K]) -> u64 {
    ranks(keys)
        .windows(2)
        .map(|w| (w[0].abs_diff(w[1]) - 1) as u64)
        .sum()
}

/// All eleven measures for one sequence.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricReport {
    pub inv: u64,
    pub dis: u64,
    pub max_disp: u64,
    pub exc: u64,
    pub rem: u64,
    pub runs: u64,
    pub sus: u64,
    pub sms: u64,
    /// False when `sms` is only the greedy upper bound.
    pub sms_exact: bool,
    pub enc: u64,
    pub osc: u64,
    pub log_reg: f64,
    pub reg_paper: u64,
}

pub fn metric_report<K: Ord>(keys: &[K]) -> MetricReport {
    let r = ranks(keys);
    let sms = sms(&r);
    let reg = reg(&r);
    MetricReport {
        inv: inv(&r),
        dis: dis(&r),
        max_disp: max_disp(&r),
        exc: exc(&r),
        rem: rem(&r),
        runs: runs(&r),
        sus: sus(&r),
        sms: sms.value,
        sms_exact: sms.exact,
        enc: enc(&r),
        osc: osc(&r),
        log_reg: reg.log_reg,
        reg_paper: reg.reg_paper,
    }
}

impl MetricReport {
    /// `(name, value)` pairs in a fixed order, values rendered as text.
    pub fn fields(&self) -> [(&'static str, alloc::string::String); 13] {
        use alloc::string::ToString;
        [
            ("inv", self.inv.to_string()),
            ("dis", self.dis.to_string()),
            ("max_disp", self.max_disp.to_string()),
            ("exc", self.exc.to_string()),
            ("rem", self.rem.to_string()),
            ("runs", self.runs.to_string()),
            ("sus", self.sus.to_string()),
            ("sms", self.sms.to_string()),
            ("sms_exact", self.sms_exact.to_string()),
            ("enc", self.enc.to_string()),
            ("osc", self.osc.to_string()),
            ("log_reg", self.log_reg.to_string()),
            ("reg_paper", self.reg_paper.to_string()),
        ]
    }
}
