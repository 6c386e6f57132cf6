use neatsort_core::baselines::{introsort_hybrid_by, melsort_by, merge_sort_by, quicksort_random_by};
use neatsort_core::generators::{generate, verify, Family, GenError, GeneratorSpec, TARGET_TOLERANCE_PCT};
use neatsort_core::metrics::runs;
use neatsort_core::{neat_sort_by, Element, MergeMode, MergePolicy};

const MODES: [MergeMode; 4] = [
    MergeMode::AdjacentPairs,
    MergeMode::LeftmostAlways,
    MergeMode::LeaveOutLongest,
    MergeMode::TripleP,
];

fn specs() -> Vec<GeneratorSpec> {
    let mut out = Vec::new();
    for n in [0, 1, 2, 17, 1000, 5000] {
        for family in Family::ALL {
            let targets: &[f64] = if family.needs_target() { &[0.0, 10.0, 50.0, 100.0] } else { &[-1.0] };
            for &t in targets {
                let target = (t >= 0.0).then_some(t);
                out.push(GeneratorSpec::new(family, n, target, n as u64 + 3));
            }
        }
    }
    out
}

#[test]
fn every_family_sorts_stably_under_every_algorithm() {
    for spec in specs() {
        let input = match generate(&spec) {
            Ok(v) => v,
            // Tiny inputs cannot reach most percentages within tolerance.
            Err(GenError::Infeasible { .. }) if spec.n < 1000 => continue,
            Err(e) => panic!("{spec:?}: {e}"),
        };
        let mut want = input.clone();
        want.sort_by_key(|e| e.key);

        for mode in MODES {
            let mut v = input.clone();
            let stats = neat_sort_by(&mut v, &MergePolicy::with_mode(mode), Element::cmp_key);
            assert_eq!(v, want, "{spec:?} {mode:?}");
            let keys: Vec<u32> = input.iter().map(|e| e.key).collect();
            assert!(stats.runs_detected <= runs(&keys) + 1, "{spec:?}");
        }

        let mut v = input.clone();
        merge_sort_by(&mut v, Element::cmp_key);
        assert_eq!(v, want, "mergesort {spec:?}");

        for (name, sort) in [
            ("quicksort", (|v: &mut [Element<u32>]| {
                quicksort_random_by(v, 9, Element::cmp_key);
            }) as fn(&mut [Element<u32>])),
            ("introsort", |v| {
                introsort_hybrid_by(v, Element::cmp_key);
            }),
            ("melsort", |v| {
                melsort_by(v, Element::cmp_key);
            }),
        ] {
            let mut v = input.clone();
            sort(&mut v);
            assert!(v.iter().map(|e| e.key).eq(want.iter().map(|e| e.key)), "{name} {spec:?}");
        }
    }
}

#[test]
fn targeted_families_land_within_tolerance() {
    for spec in specs().into_iter().filter(|s| s.family.needs_target() && s.n >= 1000) {
        let input = generate(&spec).unwrap();
        let keys: Vec<u32> = input.iter().map(|e| e.key).collect();
        let got = verify(&keys);
        let achieved = match spec.family {
            Family::InversionPct => got.inv_pct,
            Family::RunsPct => got.runs_pct,
            _ => got.maxdist_pct,
        };
        let target = spec.target_pct.unwrap();
        assert!(
            (achieved - target).abs() <= TARGET_TOLERANCE_PCT,
            "{spec:?}: achieved {achieved}"
        );
    }
}
