use crate::error::{ExtrapolationError, Result};

/// One measured observable estimate at a known total noise level.
///
/// `variance` is the variance of the *mean* (single-shot variance divided by
/// the shot count), not the single-shot variance. `shots` is informational;
/// zero means the sample size is unknown.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoisePoint {
    pub lambda: f64,
    pub mean: f64,
    pub variance: f64,
    pub shots: u64,
}

impl NoisePoint {
    pub fn new(lambda: f64, mean: f64, variance: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(ExtrapolationError::NonPositiveLevel(lambda));
        }
        if !(variance.is_finite() && variance >= 0.0) {
            return Err(ExtrapolationError::InvalidVariance(variance));
        }
        Ok(Self {
            lambda,
            mean,
            variance,
            shots: 0,
        })
    }

    pub fn with_shots(mut self, shots: u64) -> Self {
        self.shots = shots;
        self
    }
}

/// Zero-noise estimate with its propagated variance and the extrapolation
/// coefficients that produced it.
///
/// `betas` is aligned with the input points and always sums to one, so a
/// constant function is reproduced exactly. `order` is the polynomial order
/// `K`; `betas` has length `K + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtrapolationResult {
    pub theta0: f64,
    pub variance: f64,
    pub betas: Vec<f64>,
    pub order: usize,
}
