use thiserror::Error;

/// Errors produced while validating or extrapolating a noise schedule.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtrapolationError {
    #[error("extrapolation requires at least one noise point")]
    EmptyInput,
    #[error("noise level must be finite and strictly positive, got {0}")]
    NonPositiveLevel(f64),
    #[error("point variance must be finite and non-negative, got {0}")]
    InvalidVariance(f64),
    #[error("degenerate noise schedule: levels {a} and {b} are too close to separate")]
    DegenerateSchedule { a: f64, b: f64 },
    #[error("invalid interval: require 0 < {lower} < {upper}")]
    InvalidInterval { lower: f64, upper: f64 },
    #[error("standard deviation must be finite and non-negative, got {0}")]
    InvalidSigma(f64),
}

pub type Result<T> = std::result::Result<T, ExtrapolationError>;
