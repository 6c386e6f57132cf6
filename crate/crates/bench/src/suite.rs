use std::collections::HashMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use neatsort_core::generators::{generate, verify, Family, GeneratorSpec};
use neatsort_core::{Element, MergePolicy};

use crate::{Algorithm, BenchError, BenchRecord, SummaryRecord};

/// Trial count per input size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trials {
    /// Use [`default_trial_count`].
    Auto,
    Fixed(usize),
}

impl Trials {
    pub fn for_size(self, n: usize) -> usize {
        match self {
            Trials::Auto => default_trial_count(n),
            Trials::Fixed(t) => t,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    pub family: Family,
    pub target_pct: Option<f64>,
    /// Trial `k` uses seed `seed + k`.
    pub seed: u64,
    pub trials: Trials,
    pub policy: MergePolicy,
    /// Reference for `rel_perf_pct`.
    pub baseline: Algorithm,
    pub out: Option<PathBuf>,
}

impl BenchConfig {
    pub fn new(algorithms: Vec<Algorithm>, sizes: Vec<usize>, family: Family) -> Self {
        BenchConfig {
            algorithms,
            sizes,
            family,
            target_pct: None,
            seed: 0,
            trials: Trials::Auto,
            policy: MergePolicy::default(),
            baseline: Algorithm::IntroSort,
            out: None,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.algorithms.is_empty() {
            return Err(BenchError::Config("no algorithms selected".into()));
        }
        if self.sizes.is_empty() {
            return Err(BenchError::Config("no sizes given".into()));
        }
        if self.trials == Trials::Fixed(0) {
            return Err(BenchError::Config("trials must be at least 1".into()));
        }
        if self.family.needs_target() && self.target_pct.is_none() {
            return Err(BenchError::Config(format!(
                "family {} needs --pct",
                self.family
            )));
        }
        self.policy.validate()?;
        Ok(())
    }

    fn spec(&self, n: usize, trial: usize) -> GeneratorSpec {
        GeneratorSpec::new(
            self.family,
            n,
            self.target_pct,
            self.seed.wrapping_add(trial as u64),
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOutput {
    pub trials: Vec<BenchRecord>,
    pub summaries: Vec<SummaryRecord>,
}

/// Trial counts scaled down from the original experiment by a factor of
/// 100, made odd so the median is a single trial, and never below 31.
///
/// | n                        | trials |
/// |--------------------------|--------|
/// | up to 102,400            | 101    |
/// | up to 409,600            | 501    |
/// | up to 819,200            | 251    |
/// | up to 1,638,400          | 101    |
/// | up to 3,276,800          | 51     |
/// | larger                   | 31     |
pub fn default_trial_count(n: usize) -> usize {
    let original = match n {
        0..=102_400 => 10_000,
        102_401..=409_600 => 50_000,
        409_601..=819_200 => 25_000,
        819_201..=1_638_400 => 10_000,
        1_638_401..=3_276_800 => 5_000,
        3_276_801..=49_999_999 => 1_000,
        _ => 500,
    };
    let scaled = (original / 100).max(31);
    scaled | 1
}

/// `(t_baseline - t_subject) / max(t_baseline, t_subject) * 100`: positive
/// when the subject is faster.
pub fn relative_performance(t_baseline: Duration, t_subject: Duration) -> Result<f64, BenchError> {
    let (b, s) = (t_baseline.as_secs_f64(), t_subject.as_secs_f64());
    if t_baseline.is_zero() || t_subject.is_zero() {
        return Err(BenchError::NonPositiveDuration {
            baseline_ns: b * 1e9,
            subject_ns: s * 1e9,
        });
    }
    Ok((b - s) / b.max(s) * 100.0)
}

/// Middle order statistic (the lower one for even counts). Sorts `values`.
pub fn median<T: Ord + Copy>(values: &mut [T]) -> T {
    assert!(!values.is_empty(), "median of nothing");
    values.sort_unstable();
    values[(values.len() - 1) / 2]
}

fn round_to_us(ms: f64) -> f64 {
    (ms * 1000.0).round() / 1000.0
}

pub fn run_suite(config: &BenchConfig) -> Result<SuiteOutput, BenchError> {
    run_suite_with(config, |_| {})
}

/// Runs the suite, handing every accepted trial record to `on_record` as it
/// is produced.
pub fn run_suite_with<F>(config: &BenchConfig, mut on_record: F) -> Result<SuiteOutput, BenchError>
where
    F: FnMut(&BenchRecord),
{
    config.validate()?;
    let mut records = Vec::new();
    for &n in &config.sizes {
        for trial in 0..config.trials.for_size(n) {
            let spec = config.spec(n, trial);
            let input = generate(&spec)?;
            let keys: Vec<u32> = input.iter().map(|e| e.key).collect();
            let achieved = verify(&keys);

            for &algo in &config.algorithms {
                let mut buf = input.clone();
                let start = Instant::now();
                let stats = algo.run(&mut buf, &config.policy, spec.seed);
                let elapsed = start.elapsed();
                if !is_sorted(&buf) {
                    return Err(BenchError::Unsorted {
                        algo: algo.name(),
                        seed: spec.seed,
                        spec: Some(spec),
                    });
                }
                let record = BenchRecord {
                    algo,
                    n: n as u64,
                    family: config.family,
                    target_pct: spec.target_pct,
                    seed: spec.seed,
                    trial: trial as u32,
                    comparisons: stats.comparisons,
                    moves: stats.moves,
                    elapsed_ns: (elapsed.as_nanos() as u64).max(1),
                    inv_pct: achieved.inv_pct,
                    runs_pct: achieved.runs_pct,
                    maxdist_pct: achieved.maxdist_pct,
                };
                on_record(&record);
                records.push(record);
            }
        }
    }
    let summaries = summarize(&records, config.baseline)?;
    Ok(SuiteOutput {
        trials: records,
        summaries,
    })
}

fn is_sorted(v: &[Element<u32>]) -> bool {
    v.windows(2).all(|w| w[0].key <= w[1].key)
}

type CellKey = (Algorithm, u64, Family, Option<u64>);

fn cell_key(r: &BenchRecord) -> CellKey {
    (r.algo, r.n, r.family, r.target_pct.map(f64::to_bits))
}

/// Groups trial records by (algorithm, n, family, target) in order of first
/// appearance and condenses each group.
pub fn summarize(records: &[BenchRecord], baseline: Algorithm) -> Result<Vec<SummaryRecord>, BenchError> {
    let mut order: Vec<CellKey> = Vec::new();
    let mut cells: HashMap<CellKey, Vec<&BenchRecord>> = HashMap::new();
    for r in records {
        let key = cell_key(r);
        cells
            .entry(key)
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(r);
    }

    let median_ns = |rows: &[&BenchRecord]| {
        let mut ns: Vec<u64> = rows.iter().map(|r| r.elapsed_ns).collect();
        median(&mut ns)
    };

    let mut out = Vec::with_capacity(order.len());
    for key in order {
        let rows = &cells[&key];
        let med = median_ns(rows);
        let mean = rows.iter().map(|r| r.elapsed_ns as f64).sum::<f64>() / rows.len() as f64;
        let mut comps: Vec<u64> = rows.iter().map(|r| r.comparisons).collect();

        let (algo, n, family, target_bits) = key;
        let rel_perf_pct = match cells.get(&(baseline, n, family, target_bits)) {
            Some(base) => Some(relative_performance(
                Duration::from_nanos(median_ns(base)),
                Duration::from_nanos(med),
            )?),
            None => None,
        };
        out.push(SummaryRecord {
            algo,
            n,
            family,
            target_pct: target_bits.map(f64::from_bits),
            median_ms: round_to_us(med as f64 / 1e6),
            mean_ms: round_to_us(mean / 1e6),
            median_comparisons: median(&mut comps),
            rel_perf_pct,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_performance_examples() {
        let ms = Duration::from_millis;
        assert_eq!(relative_performance(ms(10), ms(10)).unwrap(), 0.0);
        assert_eq!(relative_performance(ms(20), ms(10)).unwrap(), 50.0);
        assert_eq!(relative_performance(ms(10), ms(20)).unwrap(), -50.0);
        assert!(relative_performance(Duration::ZERO, ms(1)).is_err());
        assert!(relative_performance(ms(1), Duration::ZERO).is_err());
    }

    #[test]
    fn trial_counts() {
        assert_eq!(default_trial_count(100), 101);
        assert_eq!(default_trial_count(300_000), 501);
        assert_eq!(default_trial_count(819_200), 251);
        assert_eq!(default_trial_count(3_000_000), 51);
        assert_eq!(default_trial_count(10_000_000), 31);
        assert_eq!(default_trial_count(50_000_000), 31);
        for n in [1, 1000, 500_000, 2_000_000, 100_000_000] {
            assert_eq!(default_trial_count(n) % 2, 1);
        }
    }

    #[test]
    fn median_is_middle_order_statistic() {
        assert_eq!(median(&mut [5, 1, 3]), 3);
        assert_eq!(median(&mut [4, 1, 3, 2]), 2);
        assert_eq!(median(&mut [7]), 7);
    }

    #[test]
    fn config_validation() {
        let ok = BenchConfig::new(vec![Algorithm::NeatSort], vec![10], Family::RandomPerm);
        assert!(ok.validate().is_ok());

        let mut c = ok.clone();
        c.sizes.clear();
        assert!(c.validate().is_err());
        let mut c = ok.clone();
        c.trials = Trials::Fixed(0);
        assert!(c.validate().is_err());
        let mut c = ok.clone();
        c.family = Family::RunsPct;
        assert!(c.validate().is_err());
        let mut c = ok;
        c.policy.p = 3.0;
        assert!(matches!(c.validate(), Err(BenchError::Policy(_))));
    }

    #[test]
    fn sorted_family_neatsort_uses_n_minus_one() {
        let mut c = BenchConfig::new(vec![Algorithm::NeatSort], vec![500], Family::Sorted);
        c.trials = Trials::Fixed(3);
        let out = run_suite(&c).unwrap();
        assert_eq!(out.summaries[0].median_comparisons, 499);
        assert_eq!(out.summaries[0].rel_perf_pct, None);
    }
}
