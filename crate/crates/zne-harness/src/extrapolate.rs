use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use zne_core::{zero_noise_estimate, NoisePoint};
use zne_qsim::{build_trotter_circuit, exact_evolution, magnetization_expectation, run_circuit};

use crate::config::{ReferenceMethod, RunConfig};
use crate::error::{HarnessError, Result};
use crate::records::{EstimateRecord, ExtrapolationReport};

/// Exact noise-free magnetization per configured state.
///
/// With [`ReferenceMethod::ExactEvolution`] the values come from the dense
/// matrix-exponential oracle rather than a noiseless Trotter run, so
/// extrapolation errors retain the Trotter bias of the simulated circuits.
pub fn noiseless_reference(config: &RunConfig) -> Result<BTreeMap<usize, f64>> {
    config.validate()?;
    let values: Vec<(usize, f64)> = match config.reference {
        ReferenceMethod::ExactEvolution => config
            .states
            .par_iter()
            .map(|&state| -> Result<(usize, f64)> {
                let rho = exact_evolution(
                    &config.graph,
                    config.h,
                    config.j_coupling,
                    config.t_final,
                    state,
                )?;
                Ok((state, magnetization_expectation(&rho)))
            })
            .collect::<Result<_>>()?,
        ReferenceMethod::NoiselessTrotter => {
            let circuit = build_trotter_circuit(
                &config.graph,
                config.h,
                config.j_coupling,
                config.t_final,
                config.n_trotter,
                0.0,
            )?;
            config
                .states
                .par_iter()
                .map(|&state| -> Result<(usize, f64)> {
                    let rho = run_circuit(state, &circuit)?;
                    Ok((state, magnetization_expectation(&rho)))
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(values.into_iter().collect())
}

/// Richardson-extrapolate each state over a subset of regimes.
///
/// `subset` must hold `order + 1` distinct regime numbers and every listed
/// regime must be present in the records for every state; the `error` field
/// is the deviation from the supplied noiseless reference.
pub fn extrapolate_subset(
    records: &[EstimateRecord],
    subset: &[u8],
    order: usize,
    reference: &BTreeMap<usize, f64>,
) -> Result<Vec<ExtrapolationReport>> {
    let distinct: BTreeSet<u8> = subset.iter().copied().collect();
    if subset.len() != order + 1 || distinct.len() != subset.len() {
        return Err(HarnessError::InvalidSubset {
            expected: order + 1,
            got: subset.len(),
        });
    }

    let mut by_state: BTreeMap<usize, BTreeMap<u8, &EstimateRecord>> = BTreeMap::new();
    for r in records {
        by_state.entry(r.state).or_default().insert(r.regime, r);
    }

    let mut reports = Vec::with_capacity(by_state.len());
    for (&state, regimes) in &by_state {
        let mut points = Vec::with_capacity(subset.len());
        for &regime in subset {
            let record = regimes
                .get(&regime)
                .ok_or(HarnessError::IncompleteDataset { state, regime })?;
            points.push(
                NoisePoint::new(record.lambda, record.mean, record.variance)?
                    .with_shots(record.shots),
            );
        }
        let estimate = zero_noise_estimate(&points)?;
        let reference_value = reference
            .get(&state)
            .ok_or(HarnessError::MissingReference { state })?;
        reports.push(ExtrapolationReport {
            state,
            regime_subset: subset.to_vec(),
            theta0: estimate.theta0,
            variance: estimate.variance,
            error: estimate.theta0 - reference_value,
        });
    }
    Ok(reports)
}
