use crate::error::{ExtrapolationError, Result};
use crate::point::{ExtrapolationResult, NoisePoint};
use crate::validate_schedule;

/// Richardson extrapolation weights for a schedule of distinct positive
/// noise levels.
///
/// `beta_k = prod_{l != k} lambda_l / (lambda_l - lambda_k)`. The weights
/// sum to one and annihilate the monomials `lambda^m` for `1 <= m <= K`,
/// so extrapolating a degree-`K` polynomial through `K + 1` levels recovers
/// its value at zero exactly. The product form is numerically stable for
/// the wide level spreads produced by noise folding, unlike a naive
/// Vandermonde solve.
pub fn richardson_coefficients(lambdas: &[f64]) -> Result<Vec<f64>> {
    validate_schedule(lambdas)?;
    let betas = lambdas
        .iter()
        .enumerate()
        .map(|(k, &lk)| {
            lambdas
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, &ll)| ll / (ll - lk))
                .product()
        })
        .collect();
    Ok(betas)
}

/// Extrapolate a set of noisy points to zero noise.
///
/// The estimate is `sum_k beta_k * mean_k` and its variance is
/// `sum_k beta_k^2 * variance_k`; points may carry unequal variances.
pub fn zero_noise_estimate(points: &[NoisePoint]) -> Result<ExtrapolationResult> {
    for p in points {
        if !(p.variance.is_finite() && p.variance >= 0.0) {
            return Err(ExtrapolationError::InvalidVariance(p.variance));
        }
    }
    let lambdas: Vec<f64> = points.iter().map(|p| p.lambda).collect();
    let betas = richardson_coefficients(&lambdas)?;

    let theta0 = betas
        .iter()
        .zip(points)
        .map(|(b, p)| b * p.mean)
        .sum::<f64>();
    let variance = betas
        .iter()
        .zip(points)
        .map(|(b, p)| b * b * p.variance)
        .sum::<f64>();

    debug_assert!((betas.iter().sum::<f64>() - 1.0).abs() < 1e-12 * betas.len() as f64);
    Ok(ExtrapolationResult {
        theta0,
        variance,
        order: points.len() - 1,
        betas,
    })
}
