//! Choosing which adjacent runs to merge in one pass.
//!
//! Only neighbours are ever merged: that is what keeps
//! `head(next) < tail(prev)` true between the surviving runs.

use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum MergeMode {
    /// Merge (0,1), (2,3), ...; with an odd count the last run waits.
    AdjacentPairs,
    /// Merge only the first two runs in every pass.
    LeftmostAlways,
    /// Like `AdjacentPairs`, but with an odd count the longest run waits.
    LeaveOutLongest,
    /// For each triple `A, B, C`: merge `B` and `C` when `|A| > p(|B| + |C|)`,
    /// otherwise merge `A` and `B`.
    #[default]
    TripleP,
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum PolicyError {
    #[error("merge parameter p = {0} is outside [1.0, 2.0]")]
    POutOfRange(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MergePolicy {
    pub mode: MergeMode,
    pub p: f64,
}

impl MergePolicy {
    pub const DEFAULT_P: f64 = 1.3;

    pub fn new(mode: MergeMode, p: f64) -> Result<Self, PolicyError> {
        let policy = MergePolicy { mode, p };
        policy.validate()?;
        Ok(policy)
    }

    pub fn with_mode(mode: MergeMode) -> Self {
        MergePolicy {
            mode,
            p: Self::DEFAULT_P,
        }
    }

    pub fn validate(&self) -> Result<(), PolicyError> {
        if (1.0..=2.0).contains(&self.p) {
            Ok(())
        } else {
            Err(PolicyError::POutOfRange(self.p))
        }
    }
}

impl Default for MergePolicy {
    fn default() -> Self {
        MergePolicy::with_mode(MergeMode::TripleP)
    }
}

/// One entry of a merge pass, in left-to-right order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PassItem {
    /// Run `i` survives unchanged.
    Keep(usize),
    /// Runs `left` and `left + 1` are merged.
    Merge { left: usize },
}

/// Plans one pass over runs with the given lengths. Every index appears in
/// exactly one item; at least one merge is planned whenever there are two or
/// more runs.
pub fn schedule_pass(lengths: &[usize], policy: &MergePolicy) -> Vec<PassItem> {
    let m = lengths.len();
    let mut plan = Vec::with_capacity(m);
    match policy.mode {
        MergeMode::AdjacentPairs => pair_up(0, m, &mut plan),
        MergeMode::LeftmostAlways => {
            if m >= 2 {
                plan.push(PassItem::Merge { left: 0 });
                plan.extend((2..m).map(PassItem::Keep));
            } else {
                plan.extend((0..m).map(PassItem::Keep));
            }
        }
        MergeMode::LeaveOutLongest => {
            if m.is_multiple_of(2) {
                pair_up(0, m, &mut plan);
            } else {
                // Only an even index can wait without breaking adjacency of
                // the pairs on either side.
                let longest = (0..m)
                    .step_by(2)
                    .fold(0, |best, i| if lengths[i] > lengths[best] { i } else { best });
                pair_up(0, longest, &mut plan);
                plan.push(PassItem::Keep(longest));
                pair_up(longest + 1, m, &mut plan);
            }
        }
        MergeMode::TripleP => {
            let mut j = 0;
            while j < m {
                if j + 1 == m {
                    plan.push(PassItem::Keep(j));
                    break;
                }
                let next_two = lengths[j + 1] + lengths.get(j + 2).copied().unwrap_or(0);
                if j + 2 == m || lengths[j] as f64 <= policy.p * next_two as f64 {
                    plan.push(PassItem::Merge { left: j });
                    j += 2;
                } else {
                    plan.push(PassItem::Keep(j));
                    plan.push(PassItem::Merge { left: j + 1 });
                    j += 3;
                }
            }
        }
    }
    plan
}

fn pair_up(from: usize, to: usize, plan: &mut Vec<PassItem>) {
    let mut j = from;
    while j + 1 < to {
        plan.push(PassItem::Merge { left: j });
        j += 2;
    }
    if j < to {
        plan.push(PassItem::Keep(j));
    }
}

/// Applies a plan to run lengths, yielding the lengths after the pass.
pub fn apply_to_lengths(lengths: &[usize], plan: &[PassItem]) -> Vec<usize> {
    plan.iter()
        .map(|item| match *item {
            PassItem::Keep(i) => lengths[i],
            PassItem::Merge { left } => lengths[left] + lengths[left + 1],
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn triple() -> MergePolicy {
        MergePolicy::default()
    }

    #[test]
    fn triple_p_examples() {
        assert_eq!(
            schedule_pass(&[10, 2, 3], &triple()),
            vec![PassItem::Keep(0), PassItem::Merge { left: 1 }]
        );
        assert_eq!(
            schedule_pass(&[2, 3, 10], &triple()),
            vec![PassItem::Merge { left: 0 }, PassItem::Keep(2)]
        );
        // Two runs left: the missing third length is zero and the pair merges.
        assert_eq!(
            schedule_pass(&[100, 1], &triple()),
            vec![PassItem::Merge { left: 0 }]
        );
    }

    #[test]
    fn single_run_passes_through() {
        for mode in [
            MergeMode::AdjacentPairs,
            MergeMode::LeftmostAlways,
            MergeMode::LeaveOutLongest,
            MergeMode::TripleP,
        ] {
            assert_eq!(
                schedule_pass(&[7], &MergePolicy::with_mode(mode)),
                vec![PassItem::Keep(0)]
            );
        }
    }

    #[test]
    fn leave_out_longest_picks_even_index() {
        let plan = schedule_pass(&[1, 2, 9, 1, 1], &MergePolicy::with_mode(MergeMode::LeaveOutLongest));
        assert_eq!(
            plan,
            vec![
                PassItem::Merge { left: 0 },
                PassItem::Keep(2),
                PassItem::Merge { left: 3 }
            ]
        );
        // Ties go to the lowest index.
        let plan = schedule_pass(&[5, 1, 5], &MergePolicy::with_mode(MergeMode::LeaveOutLongest));
        assert_eq!(plan, vec![PassItem::Keep(0), PassItem::Merge { left: 1 }]);
    }

    #[test]
    fn p_is_range_checked() {
        assert!(MergePolicy::new(MergeMode::TripleP, 0.99).is_err());
        assert!(MergePolicy::new(MergeMode::TripleP, 2.01).is_err());
        assert!(MergePolicy::new(MergeMode::TripleP, 1.0).is_ok());
        assert_eq!(MergePolicy::default().p, 1.3);
    }

    fn mode() -> impl Strategy<Value = MergeMode> {
        prop_oneof![
            Just(MergeMode::AdjacentPairs),
            Just(MergeMode::LeftmostAlways),
            Just(MergeMode::LeaveOutLongest),
            Just(MergeMode::TripleP),
        ]
    }

    proptest! {
        #[test]
        fn plans_cover_and_total_m_minus_one(
            mut lengths in proptest::collection::vec(1usize..50, 1..80),
            mode in mode(),
            p in 1.0f64..=2.0,
        ) {
            let policy = MergePolicy::new(mode, p).unwrap();
            let m = lengths.len();
            let mut merges = 0;
            while lengths.len() > 1 {
                let plan = schedule_pass(&lengths, &policy);
                let mut next = 0;
                for item in &plan {
                    match *item {
                        PassItem::Keep(i) => { prop_assert_eq!(i, next); next += 1; }
                        PassItem::Merge { left } => { prop_assert_eq!(left, next); next += 2; merges += 1; }
                    }
                }
                prop_assert_eq!(next, lengths.len());
                let after = apply_to_lengths(&lengths, &plan);
                prop_assert!(after.len() < lengths.len());
                lengths = after;
            }
            prop_assert_eq!(merges, m - 1);
        }
    }
}
