//! Zero-noise extrapolation primitives.
//!
//! Given estimates of an observable at several strictly positive noise
//! levels, this crate produces the Richardson-extrapolated zero-noise
//! estimate together with its propagated variance. Two independent routes
//! to the same number are provided:
//!
//! * [`zero_noise_estimate`] — the closed-form coefficient route,
//!   `theta0 = sum_k beta_k * y_k` with
//!   `beta_k = prod_{l != k} lambda_l / (lambda_l - lambda_k)`.
//! * [`polynomial_fit_solve`] — a direct Vandermonde solve for the
//!   interpolating polynomial; its constant term must agree with the
//!   coefficient route. It exists as a numerical cross-check and should
//!   stay independent of the coefficient path.
//!
//! [`linear_geometric_bound`] gives the worst-case standard deviation of a
//! two-point linear extrapolation, `sigma * (lb + la) / (lb - la)`.

mod error;
mod geometry;
mod point;
mod richardson;
mod vandermonde;

pub use error::{ExtrapolationError, Result};
pub use geometry::linear_geometric_bound;
pub use point::{ExtrapolationResult, NoisePoint};
pub use richardson::{richardson_coefficients, zero_noise_estimate};
pub use vandermonde::polynomial_fit_solve;

/// Schedules whose smallest level gap, relative to the largest level, falls
/// below this threshold are rejected as degenerate instead of being
/// regularized.
pub const MIN_RELATIVE_GAP: f64 = 1e-9;

pub(crate) fn validate_schedule(lambdas: &[f64]) -> Result<()> {
    if lambdas.is_empty() {
        return Err(ExtrapolationError::EmptyInput);
    }
    for &l in lambdas {
        if !(l.is_finite() && l > 0.0) {
            return Err(ExtrapolationError::NonPositiveLevel(l));
        }
    }
    let max = lambdas.iter().cloned().fold(0.0_f64, f64::max);
    for i in 0..lambdas.len() {
        for j in (i + 1)..lambdas.len() {
            if (lambdas[i] - lambdas[j]).abs() < MIN_RELATIVE_GAP * max {
                return Err(ExtrapolationError::DegenerateSchedule {
                    a: lambdas[i],
                    b: lambdas[j],
                });
            }
        }
    }
    Ok(())
}
