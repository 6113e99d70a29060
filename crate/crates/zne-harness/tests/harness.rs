//! End-to-end harness behavior: regime sweeps, extrapolation, statistics,
//! and dataset round trips.

use std::collections::BTreeMap;

use zne_harness::{
    aggregate_statistics, extrapolate_subset, io, noiseless_reference, run_regime_sweep,
    EstimateRecord, HarnessError, ReferenceMethod, RunConfig,
};

fn smoke_config() -> RunConfig {
    RunConfig {
        states: vec![0],
        n_shots: 10,
        ..RunConfig::default()
    }
}

#[test]
fn smoke_sweep_produces_six_records_with_reference_levels() {
    let records = run_regime_sweep(&smoke_config()).unwrap();
    assert_eq!(records.len(), 6);
    let lambdas: Vec<f64> = records.iter().map(|r| r.lambda).collect();
    assert_eq!(lambdas, vec![0.216, 0.648, 1.08, 2.16, 6.48, 10.8]);
    for (i, r) in records.iter().enumerate() {
        assert_eq!(r.regime as usize, i + 1);
        assert_eq!(r.state, 0);
        assert_eq!(r.shots, 10);
        assert!(r.mean.abs() <= 1.0);
        assert!(r.variance >= 0.0);
    }
}

#[test]
fn sweep_is_deterministic_and_seed_sensitive() {
    let config = smoke_config();
    let a = io::dataset_to_csv(&run_regime_sweep(&config).unwrap());
    let b = io::dataset_to_csv(&run_regime_sweep(&config).unwrap());
    assert_eq!(a, b, "identical configs must serialize identically");

    let reseeded = RunConfig {
        seed: 43,
        ..smoke_config()
    };
    let c = io::dataset_to_csv(&run_regime_sweep(&reseeded).unwrap());
    assert_ne!(a, c, "different master seeds must change the dataset");
}

#[test]
fn no_correction_boundary_collapses_regime_pairs() {
    // gamma = 1: the error-corrected circuits coincide with the physical
    // ones, so regimes (1,2,3) carry the same noise levels as (4,5,6).
    let config = RunConfig {
        p_physical: 1e-2,
        p_threshold: 1e-2,
        n_shots: 10,
        states: vec![3],
        ..RunConfig::default()
    };
    let records = run_regime_sweep(&config).unwrap();
    for i in 0..3 {
        assert_eq!(records[i].lambda, records[i + 3].lambda);
    }
}

#[test]
fn synthetic_quadratic_extrapolates_to_zero_error() {
    // Zero-variance estimates lying exactly on a quadratic in lambda.
    let q = |x: f64| -0.3 + 0.11 * x - 0.007 * x * x;
    let lambdas = [0.216, 0.648, 1.08, 2.16, 6.48, 10.8];
    let mut records = Vec::new();
    let mut reference = BTreeMap::new();
    for state in 0..4usize {
        let offset = state as f64 * 0.05;
        reference.insert(state, q(0.0) + offset);
        for (i, &lambda) in lambdas.iter().enumerate() {
            records.push(EstimateRecord {
                state,
                regime: (i + 1) as u8,
                lambda,
                mean: q(lambda) + offset,
                variance: 0.0,
                shots: 0,
                seed: 0,
            });
        }
    }
    for subset in [[1u8, 2, 3], [4, 5, 6], [1, 4, 5]] {
        let reports = extrapolate_subset(&records, &subset, 2, &reference).unwrap();
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert!(
                r.error.abs() < 1e-10,
                "subset {subset:?} state {}: error {}",
                r.state,
                r.error
            );
            assert_eq!(r.variance, 0.0);
        }
        let summary = aggregate_statistics(&reports).unwrap();
        assert!(summary.mean_error.abs() < 1e-10);
        assert!(summary.error_variance < 1e-20);
    }
}

#[test]
fn equal_point_variances_make_proportional_subsets_equivalent() {
    // With all six per-point variances equal, the estimator variance is
    // sigma^2 * sum beta_k^2, which depends only on relative spacing: the
    // two all-same-fold subsets match, the mixed subset is far smaller.
    let lambdas = [0.216, 0.648, 1.08, 2.16, 6.48, 10.8];
    let records: Vec<EstimateRecord> = lambdas
        .iter()
        .enumerate()
        .map(|(i, &lambda)| EstimateRecord {
            state: 0,
            regime: (i + 1) as u8,
            lambda,
            mean: 0.1,
            variance: 1.0,
            shots: 0,
            seed: 0,
        })
        .collect();
    let reference = BTreeMap::from([(0usize, 0.1)]);

    let var_of = |subset: [u8; 3]| {
        extrapolate_subset(&records, &subset, 2, &reference).unwrap()[0].variance
    };
    let qec = var_of([1, 2, 3]);
    let raw = var_of([4, 5, 6]);
    let mixed = var_of([1, 4, 5]);

    assert!(
        (qec - raw).abs() <= 1e-12 * qec,
        "proportional schedules must amplify equally: {qec} vs {raw}"
    );
    assert!(mixed < qec && mixed < raw, "mixed {mixed} vs {qec}");
    // Hand value: beta = [1.875, -1.25, 0.375] => 5.21875.
    assert!((qec - 5.21875).abs() < 1e-9);
}

#[test]
fn vanishing_noise_leaves_only_trotter_bias() {
    // A gate error this small underflows the channel mixing entirely, so
    // the estimates equal the noiseless Trotter values up to shot noise
    // while the noise levels stay distinct and extrapolation stays valid.
    let config = RunConfig {
        p_physical: 1e-18,
        p_threshold: 1e-14,
        states: (0..8).collect(),
        ..RunConfig::default()
    };
    let records = run_regime_sweep(&config).unwrap();
    let reference = noiseless_reference(&config).unwrap();
    for subset in [[1u8, 2, 3], [4, 5, 6], [1, 4, 5]] {
        let reports = extrapolate_subset(&records, &subset, 2, &reference).unwrap();
        let summary = aggregate_statistics(&reports).unwrap();
        assert!(
            summary.mean_error.abs() <= 2e-2,
            "subset {subset:?}: mean error {}",
            summary.mean_error
        );
    }
}

#[test]
fn reference_values_at_zero_time_or_zero_field() {
    let t0 = RunConfig {
        t_final: 0.0,
        states: vec![0, 7, 63],
        ..RunConfig::default()
    };
    let reference = noiseless_reference(&t0).unwrap();
    assert!((reference[&0] - 1.0).abs() < 1e-12);
    assert!(reference[&7].abs() < 1e-12);
    assert!((reference[&63] + 1.0).abs() < 1e-12);

    let no_field = RunConfig {
        h: 0.0,
        states: vec![0, 5],
        ..RunConfig::default()
    };
    let reference = noiseless_reference(&no_field).unwrap();
    assert!((reference[&0] - 1.0).abs() < 1e-10);
    // Index 5 = |000101>: four up, two down.
    assert!((reference[&5] - 2.0 / 6.0).abs() < 1e-10);
}

#[test]
fn trotter_reference_variant_matches_oracle_within_trotter_error() {
    let exact_cfg = RunConfig {
        states: vec![0, 21, 63],
        ..RunConfig::default()
    };
    let trotter_cfg = RunConfig {
        reference: ReferenceMethod::NoiselessTrotter,
        ..exact_cfg.clone()
    };
    let exact = noiseless_reference(&exact_cfg).unwrap();
    let trotter = noiseless_reference(&trotter_cfg).unwrap();
    for (&state, value) in &exact {
        assert!((value - trotter[&state]).abs() < 2e-2, "state {state}");
    }
}

#[test]
fn incomplete_and_invalid_inputs_are_rejected() {
    let records = vec![EstimateRecord {
        state: 0,
        regime: 1,
        lambda: 0.216,
        mean: 0.0,
        variance: 0.0,
        shots: 0,
        seed: 0,
    }];
    let reference = BTreeMap::from([(0usize, 0.0)]);

    match extrapolate_subset(&records, &[1, 2], 1, &reference).unwrap_err() {
        HarnessError::IncompleteDataset { state: 0, regime: 2 } => {}
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        extrapolate_subset(&records, &[1, 1], 1, &reference).unwrap_err(),
        HarnessError::InvalidSubset { .. }
    ));
    assert!(matches!(
        extrapolate_subset(&records, &[1], 2, &reference).unwrap_err(),
        HarnessError::InvalidSubset { .. }
    ));
    let empty = BTreeMap::new();
    assert!(matches!(
        extrapolate_subset(&records, &[1], 0, &empty).unwrap_err(),
        HarnessError::MissingReference { state: 0 }
    ));
}
