//! Seeded input families with controlled disorder.
//!
//! Every generated sequence is a permutation of `1..=n`, tagged with
//! positions. Inversion and runs targets are hit through inversion tables:
//! a table is drawn at random within the constraints and decoded into the
//! permutation it describes, so the achieved count is exact.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::metrics::{self, ranks};
use crate::Element;

/// Allowed gap, in percentage points, between a target and what a
/// generator can achieve for the requested `n`.
pub const TARGET_TOLERANCE_PCT: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    #[cfg_attr(feature = "serde", serde(rename = "sorted"))]
    Sorted,
    #[cfg_attr(feature = "serde", serde(rename = "reversed"))]
    Reversed,
    #[cfg_attr(feature = "serde", serde(rename = "random"))]
    RandomPerm,
    #[cfg_attr(feature = "serde", serde(rename = "inversion-pct"))]
    InversionPct,
    #[cfg_attr(feature = "serde", serde(rename = "runs-pct"))]
    RunsPct,
    #[cfg_attr(feature = "serde", serde(rename = "maxdist-pct"))]
    MaxDistPct,
    #[cfg_attr(feature = "serde", serde(rename = "half-asc-half-desc"))]
    HalfAscHalfDesc,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Sorted,
        Family::Reversed,
        Family::RandomPerm,
        Family::InversionPct,
        Family::RunsPct,
        Family::MaxDistPct,
        Family::HalfAscHalfDesc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sorted => "sorted",
            Family::Reversed => "reversed",
            Family::RandomPerm => "random",
            Family::InversionPct => "inversion-pct",
            Family::RunsPct => "runs-pct",
            Family::MaxDistPct => "maxdist-pct",
            Family::HalfAscHalfDesc => "half-asc-half-desc",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn needs_target(self) -> bool {
        matches!(
            self,
            Family::InversionPct | Family::RunsPct | Family::MaxDistPct
        )
    }
}

impl core::fmt::Display for Family {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(default))]
    pub target_pct: Option<f64>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, target_pct: Option<f64>, seed: u64) -> Self {
        GeneratorSpec {
            family,
            n,
            target_pct,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenError {
    #[error("family {0} needs a target percentage")]
    MissingTarget(Family),
    #[error("target percentage {0} is outside [0, 100]")]
    TargetOutOfRange(f64),
    #[error("{family} target {target}% is unreachable for n = {n}: {reason}")]
    Infeasible {
        family: Family,
        n: usize,
        target: f64,
        reason: String,
    },
}

/// Disorder actually present in a generated sequence, as percentages of the
/// maximum: inversions of `n(n-1)/2`, step-downs of `n - 1`, largest
/// displacement of `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Achieved {
    pub inv_pct: f64,
    pub runs_pct: f64,
    pub maxdist_pct: f64,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Vec<Element<u32>>, GenError> {
    let keys = generate_keys(spec)?;
    Ok(Element::tagged(&keys))
}

/// Keys only, a permutation of `1..=n`.
pub fn generate_keys(spec: &GeneratorSpec) -> Result<Vec<u32>, GenError> {
    let n = spec.n;
    let target = resolve_target(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let perm: Vec<usize> = match spec.family {
        Family::Sorted => (0..n).collect(),
        Family::Reversed => (0..n).rev().collect(),
        Family::RandomPerm => {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut rng);
            v
        }
        Family::HalfAscHalfDesc => {
            // The descending half holds the smaller keys, so the whole of it
            // is one backward stretch.
            let low = n - n / 2;
            (low..n).chain((0..low).rev()).collect()
        }
        Family::InversionPct => with_inversions(n, count_for(spec, target, inversion_max(n))?, &mut rng),
        Family::RunsPct => with_step_downs(n, count_for(spec, target, n.saturating_sub(1) as u64)?, &mut rng),
        Family::MaxDistPct => with_max_displacement(n, displacement_for(spec, target)?, &mut rng),
    };
    Ok(perm.into_iter().map(|v| v as u32 + 1).collect())
}

/// Measures a sequence against the three controlled axes.
pub fn verify<K: Ord>(keys: &[K]) -> Achieved {
    let n = keys.len();
    let r = ranks(keys);
    let pct = |num: u64, den: u64| {
        if den == 0 {
            0.0
        } else {
            num as f64 * 100.0 / den as f64
        }
    };
    Achieved {
        inv_pct: pct(metrics::inv(&r), inversion_max(n)),
        runs_pct: pct(metrics::runs(&r), n.saturating_sub(1) as u64),
        maxdist_pct: pct(metrics::max_disp(&r), n as u64),
    }
}

pub fn inversion_max(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

fn resolve_target(spec: &GeneratorSpec) -> Result<f64, GenError> {
    if !spec.family.needs_target() {
        return Ok(0.0);
    }
    let t = spec.target_pct.ok_or(GenError::MissingTarget(spec.family))?;
    if !(0.0..=100.0).contains(&t) {
        return Err(GenError::TargetOutOfRange(t));
    }
    Ok(t)
}

fn infeasible(spec: &GeneratorSpec, target: f64, reason: String) -> GenError {
    GenError::Infeasible {
        family: spec.family,
        n: spec.n,
        target,
        reason,
    }
}

/// Nearest achievable count out of `max`, rejected if it misses the target
/// by more than the tolerance.
fn count_for(spec: &GeneratorSpec, target: f64, max: u64) -> Result<u64, GenError> {
    if max == 0 {
        return if target == 0.0 {
            Ok(0)
        } else {
            Err(infeasible(spec, target, String::from("no pair can be out of order")))
        };
    }
    let count = libm::round(target / 100.0 * max as f64) as u64;
    let achieved = count as f64 * 100.0 / max as f64;
    if libm::fabs(achieved - target) > TARGET_TOLERANCE_PCT {
        return Err(infeasible(
            spec,
            target,
            alloc::format!("closest achievable is {count} of {max} ({achieved:.2}%)"),
        ));
    }
    Ok(count)
}

fn displacement_for(spec: &GeneratorSpec, target: f64) -> Result<usize, GenError> {
    let n = spec.n;
    if n == 0 {
        return count_for(spec, target, 0).map(|c| c as usize);
    }
    let d = (libm::ceil(target * n as f64 / 100.0) as usize).min(n - 1);
    let achieved = d as f64 * 100.0 / n as f64;
    if libm::fabs(achieved - target) > TARGET_TOLERANCE_PCT {
        return Err(infeasible(
            spec,
            target,
            alloc::format!("largest displacement {d} of n = {n} gives {achieved:.2}%"),
        ));
    }
    Ok(d)
}

/// Order-statistics tree over `0..n`, all values initially present.
struct Remaining {
    tree: Vec<u32>,
    top: usize,
}

impl Remaining {
    fn full(n: usize) -> Self {
        let mut tree = vec![0u32; n + 1];
        for i in 1..=n {
            tree[i] += 1;
            let parent = i + (i & i.wrapping_neg());
            if parent <= n {
                tree[parent] += tree[i];
            }
        }
        let top = if n == 0 { 0 } else { 1 << n.ilog2() };
        Remaining { tree, top }
    }

    /// Removes and returns the `k`-th smallest remaining value (0-based).
    fn take(&mut self, mut k: usize) -> usize {
        let mut pos = 0;
        let mut step = self.top;
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && (self.tree[next] as usize) <= k {
                k -= self.tree[next] as usize;
                pos = next;
            }
            step >>= 1;
        }
        let mut i = pos + 1;
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
        pos
    }
}

/// Permutation whose element `i` has exactly `later_smaller[i]` smaller
/// elements after it.
fn decode_later_smaller(later_smaller: &[usize]) -> Vec<usize> {
    let mut rem = Remaining::full(later_smaller.len());
    later_smaller.iter().map(|&c| rem.take(c)).collect()
}

/// Permutation whose element `i` has exactly `earlier_smaller[i]` smaller
/// elements before it.
fn decode_earlier_smaller(earlier_smaller: &[usize]) -> Vec<usize> {
    let n = earlier_smaller.len();
    let mut rem = Remaining::full(n);
    let mut out = vec![0; n];
    for i in (0..n).rev() {
        out[i] = rem.take(earlier_smaller[i]);
    }
    out
}

/// Exactly `target` inversions. Each table entry is drawn around the same
/// fraction of its range (uniform at 50%, so that target is a uniformly
/// random permutation), then the leftover is spread over random positions.
fn with_inversions(n: usize, target: u64, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let max = inversion_max(n);
    if max == 0 {
        return (0..n).collect();
    }
    let f = target as f64 / max as f64;
    let mut table: Vec<usize> = (0..n)
        .map(|i| {
            let cap = n - 1 - i;
            if f <= 0.5 {
                let hi = libm::round(2.0 * f * cap as f64) as usize;
                rng.gen_range(0..=hi.min(cap))
            } else {
                let span = libm::round(2.0 * (1.0 - f) * cap as f64) as usize;
                cap - rng.gen_range(0..=span.min(cap))
            }
        })
        .collect();

    let sum: u64 = table.iter().map(|&c| c as u64).sum();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    if sum < target {
        let mut need = target - sum;
        for &i in &order {
            let room = (n - 1 - i - table[i]) as u64;
            let add = room.min(need);
            table[i] += add as usize;
            need -= add;
        }
        debug_assert_eq!(need, 0);
    } else {
        let mut extra = sum - target;
        for &i in &order {
            let cut = (table[i] as u64).min(extra);
            table[i] -= cut as usize;
            extra -= cut;
        }
        debug_assert_eq!(extra, 0);
    }
    decode_later_smaller(&table)
}

/// Exactly `k` step-downs at positions sampled without replacement. Each
/// element's count of smaller predecessors is drawn from the range that
/// makes it rise above, or fall below, the previous element.
fn with_step_downs(n: usize, k: u64, rng: &mut ChaCha8Rng) -> Vec<usize> {
    if n < 2 {
        return (0..n).collect();
    }
    let mut descent = vec![false; n];
    for gap in index::sample(rng, n - 1, k as usize) {
        descent[gap + 1] = true;
    }
    let mut table = vec![0usize; n];
    for i in 1..n {
        let prev = table[i - 1];
        table[i] = if descent[i] {
            rng.gen_range(0..=prev)
        } else {
            rng.gen_range(prev + 1..=i)
        };
    }
    decode_earlier_smaller(&table)
}

/// Windowed shuffle with every displacement at most `d`, plus one pinned
/// exchange at distance exactly `d`.
fn with_max_displacement(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    if d == 0 || n < 2 {
        return perm;
    }
    let pinned = rng.gen_range(0..n - d);
    perm.swap(pinned, pinned + d);
    let fixed = |j: usize| j == pinned || j == pinned + d;

    for i in 0..n {
        if fixed(i) {
            continue;
        }
        // perm[i] is the origin of the element now at i; it may travel to
        // origin + d at most.
        let hi = (perm[i] + d).min(n - 1);
        let j = loop {
            let j = rng.gen_range(i..=hi);
            if !fixed(j) {
                break j;
            }
        };
        perm.swap(i, j);
    }
    perm
}
