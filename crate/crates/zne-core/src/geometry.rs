use crate::error::{ExtrapolationError, Result};

/// Worst-case standard deviation of a two-point linear extrapolation to
/// zero noise.
///
/// If both estimates carry standard deviation `sigma`, the steepest and
/// shallowest lines compatible with the error bars intersect the axis
/// `sigma * (lambda_b + lambda_a) / (lambda_b - lambda_a)` away from the
/// central line, which bounds the zero-noise uncertainty. With
/// `lambda_b = 2 * lambda_a` the bound is `3 * sigma` regardless of the
/// absolute noise scale.
pub fn linear_geometric_bound(lambda_a: f64, lambda_b: f64, sigma: f64) -> Result<f64> {
    if !(lambda_a.is_finite() && lambda_a > 0.0) {
        return Err(ExtrapolationError::NonPositiveLevel(lambda_a));
    }
    if !(lambda_b.is_finite() && lambda_b > lambda_a) {
        return Err(ExtrapolationError::InvalidInterval {
            lower: lambda_a,
            upper: lambda_b,
        });
    }
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(ExtrapolationError::InvalidSigma(sigma));
    }
    Ok(sigma * (lambda_b + lambda_a) / (lambda_b - lambda_a))
}
