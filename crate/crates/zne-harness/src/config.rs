use std::f64::consts::FRAC_PI_2;

use zne_qsim::SpinGraph;
use zne_resource::QecModel;

use crate::error::{HarnessError, Result};

/// How zero-noise reference values are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceMethod {
    /// Dense matrix-exponential oracle; extrapolation errors then include
    /// the Trotter bias of the simulated circuits.
    ExactEvolution,
    /// Noiseless run of the fold-1 Trotter circuit; errors then measure
    /// noise and sampling effects only.
    NoiselessTrotter,
}

/// Full experiment configuration.
///
/// Defaults reproduce the six-spin reference experiment: a 2x3 grid with
/// `h = 1`, `J = h/2`, evolution to `T = pi/2` in 80 Trotter steps,
/// physical gate error `1e-3` against a threshold of `1e-2`
/// (suppression `gamma = 0.1`), folds 1/3/5, and 10^4 shots per estimate
/// over all 64 computational basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub h: f64,
    pub j_coupling: f64,
    pub t_final: f64,
    pub n_trotter: u32,
    pub p_physical: f64,
    pub p_threshold: f64,
    pub folds: Vec<u32>,
    pub n_shots: u64,
    pub seed: u64,
    pub graph: SpinGraph,
    pub states: Vec<usize>,
    pub reference: ReferenceMethod,
}

impl Default for RunConfig {
    fn default() -> Self {
        let graph = SpinGraph::grid(2, 3).expect("2x3 grid is always valid");
        Self {
            h: 1.0,
            j_coupling: 0.5,
            t_final: FRAC_PI_2,
            n_trotter: 80,
            p_physical: 1e-3,
            p_threshold: 1e-2,
            folds: vec![1, 3, 5],
            n_shots: 10_000,
            seed: 42,
            graph,
            states: (0..64).collect(),
            reference: ReferenceMethod::ExactEvolution,
        }
    }
}

/// One of the six noise regimes: which fold and per-gate error to run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeSpec {
    pub regime: u8,
    pub fold: u32,
    pub p_gate: f64,
    pub error_corrected: bool,
}

impl RunConfig {
    pub fn qec(&self) -> Result<QecModel> {
        Ok(QecModel::new(self.p_physical, self.p_threshold)?)
    }

    /// Suppression factor `gamma = p / p_th`.
    pub fn gamma(&self) -> f64 {
        self.p_physical / self.p_threshold
    }

    pub fn validate(&self) -> Result<()> {
        let qec = self.qec()?;
        let _ = qec;
        for (name, v) in [
            ("h", self.h),
            ("j_coupling", self.j_coupling),
            ("t_final", self.t_final),
        ] {
            if !v.is_finite() {
                return Err(HarnessError::InvalidConfig(format!("{name} must be finite")));
            }
        }
        if self.n_trotter == 0 {
            return Err(HarnessError::InvalidConfig(
                "n_trotter must be at least 1".into(),
            ));
        }
        if self.n_shots < 2 {
            return Err(HarnessError::InvalidConfig(
                "n_shots must be at least 2".into(),
            ));
        }
        if self.folds.len() != 3 {
            return Err(HarnessError::InvalidConfig(format!(
                "exactly three folds define the six regimes, got {:?}",
                self.folds
            )));
        }
        for w in self.folds.windows(2) {
            if w[1] <= w[0] {
                return Err(HarnessError::InvalidConfig(
                    "folds must be strictly increasing".into(),
                ));
            }
        }
        for &f in &self.folds {
            if f == 0 || f % 2 == 0 {
                return Err(HarnessError::InvalidConfig(format!(
                    "folds must be odd positive integers, got {f}"
                )));
            }
        }
        if self.states.is_empty() {
            return Err(HarnessError::InvalidConfig("states must be nonempty".into()));
        }
        let dim = 1usize << self.graph.n_sites();
        let mut seen = vec![false; dim];
        for &s in &self.states {
            if s >= dim {
                return Err(HarnessError::InvalidConfig(format!(
                    "state {s} out of range for {} sites",
                    self.graph.n_sites()
                )));
            }
            if seen[s] {
                return Err(HarnessError::InvalidConfig(format!("state {s} repeated")));
            }
            seen[s] = true;
        }
        Ok(())
    }

    /// The six regimes in order: error-corrected circuits at each fold,
    /// then uncorrected circuits at each fold.
    pub fn regimes(&self) -> Result<Vec<RegimeSpec>> {
        let qec = self.qec()?;
        let mut out = Vec::with_capacity(2 * self.folds.len());
        for (i, &fold) in self.folds.iter().enumerate() {
            out.push(RegimeSpec {
                regime: (i + 1) as u8,
                fold,
                p_gate: qec.p_logical(),
                error_corrected: true,
            });
        }
        for (i, &fold) in self.folds.iter().enumerate() {
            out.push(RegimeSpec {
                regime: (self.folds.len() + i + 1) as u8,
                fold,
                p_gate: self.p_physical,
                error_corrected: false,
            });
        }
        Ok(out)
    }
}
