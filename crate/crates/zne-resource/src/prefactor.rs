use crate::error::{ResourceError, Result};

/// Minimum relative separation between multipliers, mirroring the schedule
/// degeneracy rule of the extrapolation weights.
const MIN_RELATIVE_GAP: f64 = 1e-9;

/// Variance prefactor for an all-logical schedule at relative levels
/// `M_0 .. M_K`:
///
/// `#1 = sum_k prod_{l != k} M_l^2 / (M_l - M_k)^2`.
///
/// This equals `sum_k beta_k^2` for Richardson weights on any absolute
/// schedule proportional to the multipliers; the common scale
/// (`gamma * n * p`) cancels, so the prefactor is invariant under uniform
/// rescaling.
pub fn prefactor_all_logical(multipliers: &[f64]) -> Result<f64> {
    validate_multipliers(multipliers)?;
    let sum = multipliers
        .iter()
        .enumerate()
        .map(|(k, &mk)| {
            multipliers
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, &ml)| {
                    let d = ml - mk;
                    (ml * ml) / (d * d)
                })
                .product::<f64>()
        })
        .sum();
    Ok(sum)
}

/// Variance prefactor for a mixed schedule: one error-corrected anchor at
/// relative level `gamma` plus physical points at `M_1 .. M_K` (in units of
/// the uncorrected circuit noise `n * p`):
///
/// `#2 = prod_l M_l^2 / (M_l - gamma)^2
///     + sum_k gamma^2 / (gamma - M_k)^2 * prod_{l != k} M_l^2 / (M_l - M_k)^2`.
///
/// As `gamma -> 0` the anchor pins the extrapolation and the prefactor
/// tends to one: the zero-noise estimate becomes as sharp as a single
/// direct measurement.
pub fn prefactor_mixed(gamma: f64, multipliers: &[f64]) -> Result<f64> {
    if !(gamma.is_finite() && gamma > 0.0) {
        return Err(ResourceError::InvalidInput(format!(
            "anchor must be positive, got {gamma}"
        )));
    }
    if multipliers.is_empty() {
        // Anchor-only schedule: a single point extrapolates as itself.
        return Ok(1.0);
    }
    validate_multipliers(multipliers)?;
    let min = multipliers.iter().cloned().fold(f64::INFINITY, f64::min);
    if gamma >= min {
        return Err(ResourceError::ScheduleOverlap {
            gamma,
            min_multiplier: min,
        });
    }

    let anchor_term: f64 = multipliers
        .iter()
        .map(|&ml| {
            let d = ml - gamma;
            (ml * ml) / (d * d)
        })
        .product();

    let physical_terms: f64 = multipliers
        .iter()
        .enumerate()
        .map(|(k, &mk)| {
            let dg = gamma - mk;
            let front = (gamma * gamma) / (dg * dg);
            let prod: f64 = multipliers
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, &ml)| {
                    let d = ml - mk;
                    (ml * ml) / (d * d)
                })
                .product();
            front * prod
        })
        .sum();

    Ok(anchor_term + physical_terms)
}

fn validate_multipliers(multipliers: &[f64]) -> Result<()> {
    if multipliers.is_empty() {
        return Err(ResourceError::InvalidInput(
            "schedule needs at least one multiplier".into(),
        ));
    }
    let mut max = 0.0_f64;
    for &m in multipliers {
        if !(m.is_finite() && m > 0.0) {
            return Err(ResourceError::InvalidInput(format!(
                "multipliers must be positive, got {m}"
            )));
        }
        max = max.max(m);
    }
    for i in 0..multipliers.len() {
        for j in (i + 1)..multipliers.len() {
            if (multipliers[i] - multipliers[j]).abs() < MIN_RELATIVE_GAP * max {
                return Err(ResourceError::DegenerateSchedule {
                    a: multipliers[i],
                    b: multipliers[j],
                });
            }
        }
    }
    Ok(())
}
