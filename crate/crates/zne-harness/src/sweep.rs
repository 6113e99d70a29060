use rayon::prelude::*;

use zne_qsim::{build_trotter_circuit, fold_circuit, run_circuit, sample_magnetization};

use crate::config::RunConfig;
use crate::error::Result;
use crate::records::EstimateRecord;

/// Deterministic per-task seed for a (master seed, state, regime) triple.
///
/// Two SplitMix64 finalizer rounds: the state index is folded into the
/// master seed with the golden-ratio constant, the regime with a second odd
/// constant, and each fold is passed through the standard SplitMix64 mix
/// (`z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; ...`). The derivation is part
/// of the dataset format: re-running any single task with the recorded seed
/// reproduces its statistics bit for bit.
pub fn derive_seed(master: u64, state: u64, regime: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    let with_state = mix(master ^ state.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    mix(with_state ^ regime.wrapping_mul(0xC2B2_AE3D_27D4_EB4F))
}

/// Run every (state, regime) combination of the config and collect one
/// estimate per task, ordered by state then regime.
///
/// Tasks are independent and fan out across threads; determinism comes from
/// the per-task seeds, not the schedule.
pub fn run_regime_sweep(config: &RunConfig) -> Result<Vec<EstimateRecord>> {
    config.validate()?;

    let regimes = config.regimes()?;
    let mut circuits = Vec::with_capacity(regimes.len());
    for spec in &regimes {
        let base = build_trotter_circuit(
            &config.graph,
            config.h,
            config.j_coupling,
            config.t_final,
            config.n_trotter,
            spec.p_gate,
        )?;
        circuits.push((spec.regime, fold_circuit(&base, spec.fold)?));
    }

    let tasks: Vec<(usize, &(u8, zne_qsim::CircuitSpec))> = config
        .states
        .iter()
        .flat_map(|&state| circuits.iter().map(move |c| (state, c)))
        .collect();

    let mut records = tasks
        .into_par_iter()
        .map(|(state, (regime, circuit))| -> Result<EstimateRecord> {
            let rho = run_circuit(state, circuit)?;
            let seed = derive_seed(config.seed, state as u64, *regime as u64);
            let sample = sample_magnetization(&rho, config.n_shots, seed)?;
            Ok(EstimateRecord {
                state,
                regime: *regime,
                lambda: circuit.noise_level(),
                mean: sample.mean,
                variance: sample.variance_of_mean,
                shots: sample.shots,
                seed,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    records.sort_by_key(|r| (r.state, r.regime));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_seeds_are_frozen() {
        // Pinned values guard the documented derivation against drift; they
        // were computed once from the formula above with independent
        // arithmetic.
        assert_eq!(derive_seed(42, 0, 1), 13759336396584806957);
        assert_eq!(derive_seed(42, 1, 1), 10081340062534698287);
        assert_eq!(derive_seed(42, 0, 2), 15931326876747809745);
        assert_eq!(derive_seed(0, 0, 0), 12035550249420947055);
    }

    #[test]
    fn derived_seeds_are_distinct_over_the_default_grid() {
        let mut seen = std::collections::HashSet::new();
        for state in 0..64u64 {
            for regime in 1..=6u64 {
                assert!(seen.insert(derive_seed(42, state, regime)));
            }
        }
    }
}
