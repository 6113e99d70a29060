//! Acceptance suite: one test per criterion, each asserting its stated
//! tolerance and runtime budget and printing a `[PASS]` line (visible with
//! `--nocapture`).
//!
//! Run with `cargo test -p zne-cli --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zne_core::{
    linear_geometric_bound, polynomial_fit_solve, richardson_coefficients, zero_noise_estimate,
    NoisePoint,
};
use zne_harness::{
    aggregate_statistics, extrapolate_subset, io as hio, noiseless_reference, run_regime_sweep,
    EstimateRecord, RunConfig,
};
use zne_qsim::{
    apply_gate, build_trotter_circuit, depolarize, exact_evolution, fold_circuit,
    magnetization_expectation, run_circuit, DensityMatrix, GateOp, SpinGraph,
};
use zne_resource::{
    emit_tables, geometric_runtime_advantage, prefactor_all_logical, prefactor_mixed,
    shots_equivalence_factor,
};

const PI_2: f64 = std::f64::consts::FRAC_PI_2;
const GAMMAS: [f64; 4] = [0.01, 0.1, 0.5, 0.9];
const ORDERS: [usize; 5] = [1, 2, 3, 4, 5];
const SUBSETS: [[u8; 3]; 3] = [[1, 2, 3], [4, 5, 6], [1, 4, 5]];

/// Printed cells of the runtime-ratio table with their displayed decimals.
const TAU_TABLE: [[(f64, u8); 5]; 4] = [
    [(9.9, 1), (56.0, 0), (270.0, 0), (1213.0, 0), (5185.0, 0)],
    [(9.0, 1), (47.0, 0), (193.0, 0), (569.0, 0), (1017.0, 0)],
    [(5.3, 1), (15.0, 0), (27.0, 0), (35.0, 0), (39.0, 0)],
    [(2.5, 1), (4.0, 0), (6.0, 0), (7.0, 0), (8.0, 0)],
];

/// Printed cells of the mixed-variance table with their displayed decimals.
const VAR_TABLE: [[(f64, u8); 5]; 4] = [
    [(1.01, 2), (1.02, 2), (1.02, 2), (1.03, 2), (1.07, 2)],
    [(1.11, 2), (1.22, 2), (1.43, 2), (2.21, 2), (5.45, 2)],
    [(1.89, 2), (3.72, 2), (10.09, 2), (36.03, 2), (142.6, 1)],
    [(3.98, 2), (13.51, 2), (47.85, 2), (176.85, 2), (666.83, 2)],
];

fn assert_within_budget(name: &str, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "{name} took {elapsed:.2?}, budget {budget:.2?}"
    );
}

/// The full default run, shared between the experiment-property and
/// determinism criteria so the suite performs two (not three) full sweeps.
fn full_default_run() -> &'static Vec<EstimateRecord> {
    static RUN: OnceLock<Vec<EstimateRecord>> = OnceLock::new();
    RUN.get_or_init(|| run_regime_sweep(&RunConfig::default()).expect("default sweep runs"))
}

#[test]
fn criterion_1_runtime_ratio_table_reproduction() {
    let start = Instant::now();
    let tables = emit_tables(&GAMMAS, &ORDERS).unwrap();
    for (i, row) in TAU_TABLE.iter().enumerate() {
        for (j, &(printed, decimals)) in row.iter().enumerate() {
            let got = tables.tau_ratio[i][j];
            let tol = if decimals == 1 {
                0.05
            } else if printed < 100.0 {
                0.5
            } else {
                0.01 * printed
            };
            assert!(
                (got - printed).abs() <= tol,
                "gamma={} K={}: {got} vs printed {printed} (tol {tol})",
                GAMMAS[i],
                ORDERS[j]
            );
        }
    }
    let elapsed = start.elapsed();
    assert_within_budget("criterion 1", elapsed, Duration::from_secs(1));
    println!("[PASS] criterion 1: 20 runtime-ratio cells at displayed precision ({elapsed:.2?})");
}

#[test]
fn criterion_2_mixed_variance_table_reproduction() {
    let start = Instant::now();
    let tables = emit_tables(&GAMMAS, &ORDERS).unwrap();
    for (i, row) in VAR_TABLE.iter().enumerate() {
        for (j, &(printed, decimals)) in row.iter().enumerate() {
            let got = tables.mixed_variance[i][j];
            let tol = if decimals == 2 { 0.01 } else { 0.01 * printed };
            assert!(
                (got - printed).abs() <= tol,
                "gamma={} K={}: {got} vs printed {printed} (tol {tol})",
                GAMMAS[i],
                ORDERS[j]
            );
        }
    }
    let elapsed = start.elapsed();
    assert_within_budget("criterion 2", elapsed, Duration::from_secs(1));
    println!("[PASS] criterion 2: 20 mixed-variance cells at displayed precision ({elapsed:.2?})");
}

#[test]
fn criterion_3_closed_form_anchors() {
    let start = Instant::now();

    // Strong-correction limit of the two-point shot-count ratio.
    let shots = shots_equivalence_factor(1e-9).unwrap();
    assert!((shots - 9.0).abs() < 1e-6, "{shots}");

    // Two-point geometric runtime advantage in the same limit.
    let advantage = geometric_runtime_advantage(1e-9).unwrap();
    assert!((advantage - 18.0).abs() < 2e-6, "{advantage}");

    // Doubling the noise level bounds the zero-noise std by exactly 3 sigma.
    for lambda in [1.0, 0.5, 0.25, 2.0, 64.0] {
        for sigma in [1.0, 0.7, 3.25] {
            let bound = linear_geometric_bound(lambda, 2.0 * lambda, sigma).unwrap();
            assert_eq!(bound, 3.0 * sigma, "lambda={lambda} sigma={sigma}");
        }
    }
    // Non-dyadic levels stay within round-off of 3 sigma.
    for lambda in [0.216, 0.1, 2.16, 0.037] {
        let bound = linear_geometric_bound(lambda, 2.0 * lambda, 0.9).unwrap();
        assert!((bound - 2.7).abs() <= 1e-14, "lambda={lambda}: {bound}");
    }

    let elapsed = start.elapsed();
    println!("[PASS] criterion 3: closed-form anchors 9, 18 and 3-sigma ({elapsed:.2?})");
}

#[test]
fn criterion_4_prefactor_coefficient_consistency() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97ed);
    for trial in 0..500 {
        let k = 1 + trial % 5;
        let gamma: f64 = rng.random_range(0.001..0.9);
        let mut multipliers = Vec::with_capacity(k);
        let mut level: f64 = rng.random_range((1.5 * gamma).max(1.0)..3.0);
        for _ in 0..k {
            multipliers.push(level);
            level *= rng.random_range(1.1..2.2);
        }

        let p1 = prefactor_all_logical(&multipliers).unwrap();
        let betas = richardson_coefficients(&multipliers).unwrap();
        let sum_sq: f64 = betas.iter().map(|b| b * b).sum();
        assert!(
            (p1 - sum_sq).abs() <= 1e-9 * p1.max(sum_sq),
            "trial {trial}: #1 {p1} vs {sum_sq}"
        );

        let p2 = prefactor_mixed(gamma, &multipliers).unwrap();
        let mut schedule = vec![gamma];
        schedule.extend_from_slice(&multipliers);
        let betas = richardson_coefficients(&schedule).unwrap();
        let sum_sq: f64 = betas.iter().map(|b| b * b).sum();
        assert!(
            (p2 - sum_sq).abs() <= 1e-9 * p2.max(sum_sq),
            "trial {trial}: #2 {p2} vs {sum_sq}"
        );
    }
    let elapsed = start.elapsed();
    assert_within_budget("criterion 4", elapsed, Duration::from_secs(1));
    println!("[PASS] criterion 4: prefactors match sum of squared weights on 500 schedules ({elapsed:.2?})");
}

#[test]
fn criterion_5_regime_noise_levels() {
    let start = Instant::now();
    let config = RunConfig::default();
    let qec = config.qec().unwrap();
    let logical =
        build_trotter_circuit(&config.graph, 1.0, 0.5, PI_2, 80, qec.p_logical()).unwrap();
    let physical =
        build_trotter_circuit(&config.graph, 1.0, 0.5, PI_2, 80, config.p_physical).unwrap();
    assert_eq!(logical.gate_count(), 2160, "80 * (6 + 3 * 7) gates");

    let mut levels = Vec::new();
    for base in [&logical, &physical] {
        for fold in [1u32, 3, 5] {
            levels.push(fold_circuit(base, fold).unwrap().noise_level());
        }
    }
    assert_eq!(levels, vec![0.216, 0.648, 1.08, 2.16, 6.48, 10.8]);
    let elapsed = start.elapsed();
    assert_within_budget("criterion 5", elapsed, Duration::from_secs(1));
    println!("[PASS] criterion 5: six regime noise levels exact ({elapsed:.2?})");
}

fn random_gate(rng: &mut ChaCha8Rng, n_qubits: usize) -> GateOp {
    let error_prob = rng.random_range(0.0..0.3);
    match rng.random_range(0u8..3) {
        0 => GateOp::Rx {
            target: rng.random_range(0..n_qubits),
            angle: rng.random_range(-3.2..3.2),
            error_prob,
        },
        1 => GateOp::Rz {
            target: rng.random_range(0..n_qubits),
            angle: rng.random_range(-3.2..3.2),
            error_prob,
        },
        _ => {
            let control = rng.random_range(0..n_qubits);
            let mut target = rng.random_range(0..n_qubits);
            while target == control {
                target = rng.random_range(0..n_qubits);
            }
            GateOp::Cnot {
                control,
                target,
                error_prob,
            }
        }
    }
}

#[test]
fn criterion_6_simulator_soundness() {
    let start = Instant::now();

    // 10^4 random gate+channel applications with full validation after
    // every application.
    let mut rng = ChaCha8Rng::seed_from_u64(0x50f7);
    for (n_qubits, ops) in [(2usize, 5_000usize), (3, 5_000)] {
        let initial = rng.random_range(0..(1usize << n_qubits));
        let mut rho = DensityMatrix::basis_state(n_qubits, initial).unwrap();
        for step in 0..ops {
            let gate = random_gate(&mut rng, n_qubits);
            rho = apply_gate(&rho, &gate).unwrap();
            rho.validate()
                .unwrap_or_else(|e| panic!("{n_qubits}q gate step {step}: {e}"));
            let p = gate.error_prob();
            rho = match gate.targets() {
                (q, None) => depolarize(&rho, &[q], p).unwrap(),
                (a, Some(b)) => depolarize(&rho, &[a, b], p).unwrap(),
            };
            rho.validate()
                .unwrap_or_else(|e| panic!("{n_qubits}q channel step {step}: {e}"));
        }
    }

    // Noiseless fold equivalence at 1e-9.
    let graph = SpinGraph::grid(2, 3).unwrap();
    let noiseless = build_trotter_circuit(&graph, 1.0, 0.5, PI_2, 80, 0.0).unwrap();
    for state in [0usize, 7, 42] {
        let base = magnetization_expectation(&run_circuit(state, &noiseless).unwrap());
        for fold in [3u32, 5] {
            let folded = fold_circuit(&noiseless, fold).unwrap();
            let value = magnetization_expectation(&run_circuit(state, &folded).unwrap());
            assert!(
                (value - base).abs() < 1e-9,
                "state {state} fold {fold}: {value} vs {base}"
            );
        }
    }

    // Noiseless Trotter against the matrix-exponential oracle for all 64
    // basis states at the frozen tolerance.
    let mut worst = 0.0_f64;
    for state in 0..64usize {
        let trotter = magnetization_expectation(&run_circuit(state, &noiseless).unwrap());
        let exact =
            magnetization_expectation(&exact_evolution(&graph, 1.0, 0.5, PI_2, state).unwrap());
        let err = (trotter - exact).abs();
        worst = worst.max(err);
        assert!(err < 2e-2, "state {state}: trotter error {err}");
    }

    let elapsed = start.elapsed();
    assert_within_budget("criterion 6", elapsed, Duration::from_secs(120));
    println!(
        "[PASS] criterion 6: invariants over 10^4 random ops, fold equivalence, trotter error <= {worst:.2e} ({elapsed:.2?})"
    );
}

#[test]
fn criterion_7_experiment_variance_and_error_ordering() {
    let start = Instant::now();
    let config = RunConfig::default();
    let records = full_default_run();
    assert_eq!(records.len(), 384, "6 regimes x 64 states");

    let reference = noiseless_reference(&config).unwrap();
    let mut mean_variance = BTreeMap::new();
    let mut mean_abs_error = BTreeMap::new();
    for subset in SUBSETS {
        let reports = extrapolate_subset(records, &subset, 2, &reference).unwrap();
        let summary = aggregate_statistics(&reports).unwrap();
        mean_variance.insert(subset, summary.variance_stats.mean);
        mean_abs_error.insert(subset, summary.mean_abs_error);
        println!(
            "  subset {subset:?}: mean Var[theta0] = {:.3e}, mean |error| = {:.3e}",
            summary.variance_stats.mean, summary.mean_abs_error
        );
    }

    // Mixed data strictly beats both all-same-hardware subsets on variance.
    let mixed = mean_variance[&[1, 4, 5]];
    assert!(
        mixed < mean_variance[&[1, 2, 3]] && mixed < mean_variance[&[4, 5, 6]],
        "variance ordering violated: {mean_variance:?}"
    );

    // With per-point variances forced equal, the proportional subsets
    // amplify identically (up to the float representation of the levels).
    let forced: Vec<EstimateRecord> = records
        .iter()
        .map(|r| EstimateRecord {
            variance: 1.0,
            ..*r
        })
        .collect();
    let var_of = |subset: [u8; 3]| {
        let reports = extrapolate_subset(&forced, &subset, 2, &reference).unwrap();
        reports.iter().map(|r| r.variance).sum::<f64>() / reports.len() as f64
    };
    let qec = var_of([1, 2, 3]);
    let raw = var_of([4, 5, 6]);
    assert!(
        (qec - raw).abs() <= 1e-12 * qec,
        "forced-equal variances differ: {qec} vs {raw}"
    );

    // Mixed data is no worse than raw physical data on mean |error|.
    assert!(
        mean_abs_error[&[1, 4, 5]] <= mean_abs_error[&[4, 5, 6]],
        "error ordering violated: {mean_abs_error:?}"
    );

    let elapsed = start.elapsed();
    assert_within_budget("criterion 7", elapsed, Duration::from_secs(900));
    println!("[PASS] criterion 7: variance and error orderings on the full default run ({elapsed:.2?})");
}

#[test]
fn criterion_8_full_run_determinism() {
    let start = Instant::now();
    let first = hio::dataset_to_csv(full_default_run());
    let second = hio::dataset_to_csv(&run_regime_sweep(&RunConfig::default()).unwrap());
    assert_eq!(first.as_bytes(), second.as_bytes(), "dataset bytes differ");
    let elapsed = start.elapsed();
    println!("[PASS] criterion 8: two full runs serialize byte-identically ({elapsed:.2?})");
}

#[test]
fn criterion_9_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0af_acce);
    for trial in 0..1000 {
        let k = trial % 6;
        let mut lambdas = vec![rng.random_range(1e-3f64..1e2)];
        for _ in 0..k {
            let last = *lambdas.last().unwrap();
            lambdas.push(last * rng.random_range(1.05..3.0));
        }
        let points: Vec<NoisePoint> = lambdas
            .iter()
            .map(|&l| {
                NoisePoint::new(l, rng.random_range(-1.0..1.0), rng.random_range(0.0..0.01))
                    .unwrap()
            })
            .collect();
        let via_betas = zero_noise_estimate(&points).unwrap().theta0;
        let via_solve = polynomial_fit_solve(&points).unwrap()[0];
        let scale = via_betas.abs().max(via_solve.abs()).max(1.0);
        assert!(
            (via_betas - via_solve).abs() <= 1e-9 * scale,
            "trial {trial}: {via_betas} vs {via_solve}"
        );
    }
    let elapsed = start.elapsed();
    println!("[PASS] criterion 9: weight and solver routes agree on 1000 instances ({elapsed:.2?})");
}
