use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResourceError {
    #[error("degenerate schedule: multipliers {a} and {b} are too close to separate")]
    DegenerateSchedule { a: f64, b: f64 },
    #[error("schedule overlap: anchor {gamma} must sit strictly below the smallest physical multiplier {min_multiplier}")]
    ScheduleOverlap { gamma: f64, min_multiplier: f64 },
    #[error("no correction: suppression factor must satisfy 0 < gamma < 1, got {gamma}")]
    NoCorrection { gamma: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, ResourceError>;
