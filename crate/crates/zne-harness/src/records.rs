use serde::{Deserialize, Serialize};

/// One sampled magnetization estimate from a (state, regime) task.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimateRecord {
    pub state: usize,
    pub regime: u8,
    /// Total circuit noise level of the regime's folded circuit.
    pub lambda: f64,
    pub mean: f64,
    /// Sampled variance of the mean.
    pub variance: f64,
    pub shots: u64,
    /// The derived per-task RNG seed actually used for sampling.
    pub seed: u64,
}

/// Zero-noise extrapolation of one state over a regime subset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtrapolationReport {
    pub state: usize,
    pub regime_subset: Vec<u8>,
    pub theta0: f64,
    pub variance: f64,
    /// Signed deviation from the noiseless reference value.
    pub error: f64,
}
