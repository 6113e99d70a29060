use crate::error::{ResourceError, Result};

/// Quadratic-suppression model of an error-correction code.
///
/// A code with threshold `p_th` running on hardware with per-gate error `p`
/// yields logical gates with error `p_L = c p^2 = gamma * p`, where
/// `c = 1 / p_th` bounds the number of two-error events per correction
/// cycle and `gamma = p / p_th <= 1`. At `gamma = 1` the code does
/// nothing; construction allows that boundary, but operations that divide
/// by `1 - gamma` reject it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QecModel {
    pub p: f64,
    pub p_th: f64,
}

impl QecModel {
    pub fn new(p: f64, p_th: f64) -> Result<Self> {
        if !(p.is_finite() && p_th.is_finite() && p > 0.0 && p <= p_th) {
            return Err(ResourceError::InvalidInput(format!(
                "require 0 < p <= p_th, got p = {p}, p_th = {p_th}"
            )));
        }
        Ok(Self { p, p_th })
    }

    /// Suppression factor `gamma = p / p_th`.
    pub fn gamma(&self) -> f64 {
        self.p / self.p_th
    }

    /// Logical per-gate error probability `gamma * p`.
    pub fn p_logical(&self) -> f64 {
        self.gamma() * self.p
    }

    /// Two-error event bound `c = 1 / p_th`.
    pub fn two_error_bound(&self) -> f64 {
        1.0 / self.p_th
    }
}

/// Wall time per shot for logical and physical circuit executions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuntimeModel {
    pub tau_logical: f64,
    pub tau_physical: f64,
}

impl RuntimeModel {
    pub fn new(tau_logical: f64, tau_physical: f64) -> Result<Self> {
        if !(tau_physical.is_finite() && tau_physical > 0.0)
            || !(tau_logical.is_finite() && tau_logical >= tau_physical)
        {
            return Err(ResourceError::InvalidInput(format!(
                "require 0 < tau_physical <= tau_logical, got {tau_physical} and {tau_logical}"
            )));
        }
        Ok(Self {
            tau_logical,
            tau_physical,
        })
    }
}

/// An extrapolation schedule in relative noise units, with the split into
/// logical (error-corrected) and physical points.
///
/// For the all-logical family the multipliers are `M_0 .. M_K` in units of
/// `gamma * n * p`; for the mixed family the first multiplier is the anchor
/// `gamma` and the rest are `M_1 .. M_K` in units of `n * p`. Prefactors
/// depend only on multiplier ratios, so the absolute unit never enters.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleSpec {
    multipliers: Vec<f64>,
    n_logical_points: usize,
    n_physical_points: usize,
}

impl ScheduleSpec {
    /// Schedule with every point error-corrected.
    pub fn all_logical(multipliers: &[f64]) -> Result<Self> {
        validate_increasing(multipliers)?;
        Ok(Self {
            multipliers: multipliers.to_vec(),
            n_logical_points: multipliers.len(),
            n_physical_points: 0,
        })
    }

    /// Schedule with a single error-corrected anchor at `gamma` below `K`
    /// physical points. `K = 0` (anchor only) is allowed.
    pub fn mixed(gamma: f64, multipliers: &[f64]) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(ResourceError::InvalidInput(format!(
                "anchor must be positive, got {gamma}"
            )));
        }
        if !multipliers.is_empty() {
            validate_increasing(multipliers)?;
        }
        if let Some(&min) = multipliers.first() {
            if gamma >= min {
                return Err(ResourceError::ScheduleOverlap {
                    gamma,
                    min_multiplier: min,
                });
            }
        }
        let mut all = Vec::with_capacity(multipliers.len() + 1);
        all.push(gamma);
        all.extend_from_slice(multipliers);
        Ok(Self {
            multipliers: all,
            n_logical_points: 1,
            n_physical_points: multipliers.len(),
        })
    }

    /// Polynomial order `K` (one less than the number of points).
    pub fn order(&self) -> usize {
        self.multipliers.len() - 1
    }

    pub fn n_points(&self) -> usize {
        self.multipliers.len()
    }

    pub fn n_logical_points(&self) -> usize {
        self.n_logical_points
    }

    pub fn n_physical_points(&self) -> usize {
        self.n_physical_points
    }

    /// Full multiplier sequence, anchor included for mixed schedules.
    pub fn multipliers(&self) -> &[f64] {
        &self.multipliers
    }
}

fn validate_increasing(multipliers: &[f64]) -> Result<()> {
    if multipliers.is_empty() {
        return Err(ResourceError::InvalidInput(
            "schedule needs at least one multiplier".into(),
        ));
    }
    for &m in multipliers {
        if !(m.is_finite() && m > 0.0) {
            return Err(ResourceError::InvalidInput(format!(
                "multipliers must be positive, got {m}"
            )));
        }
    }
    for w in multipliers.windows(2) {
        if w[1] <= w[0] {
            return Err(ResourceError::InvalidInput(format!(
                "multipliers must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}
