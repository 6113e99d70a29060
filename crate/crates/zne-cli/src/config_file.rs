use std::path::{Path, PathBuf};

use serde::Deserialize;

use zne_harness::{ReferenceMethod, RunConfig};
use zne_qsim::SpinGraph;

use crate::error::{CliError, Result};

/// JSON config file. Every field is optional and falls back to the
/// reference-experiment defaults; unknown keys are rejected.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfigFile {
    pub h: Option<f64>,
    pub j_coupling: Option<f64>,
    pub t_final: Option<f64>,
    pub n_trotter: Option<u32>,
    pub p_physical: Option<f64>,
    pub p_threshold: Option<f64>,
    pub folds: Option<Vec<u32>>,
    pub n_shots: Option<u64>,
    pub seed: Option<u64>,
    pub states: Option<Vec<usize>>,
    pub graph: Option<GraphConfig>,
    /// `"exact"` (matrix-exponential oracle) or `"trotter"` (noiseless
    /// circuit run); defaults to `"exact"`.
    pub reference_method: Option<String>,
    pub output_dataset: Option<PathBuf>,
    pub output_report: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphConfig {
    pub n_sites: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CliConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Overlay the file's settings on a base config.
    pub fn apply(&self, mut config: RunConfig) -> Result<RunConfig> {
        if let Some(v) = self.h {
            config.h = v;
        }
        if let Some(v) = self.j_coupling {
            config.j_coupling = v;
        }
        if let Some(v) = self.t_final {
            config.t_final = v;
        }
        if let Some(v) = self.n_trotter {
            config.n_trotter = v;
        }
        if let Some(v) = self.p_physical {
            config.p_physical = v;
        }
        if let Some(v) = self.p_threshold {
            config.p_threshold = v;
        }
        if let Some(v) = &self.folds {
            config.folds = v.clone();
        }
        if let Some(v) = self.n_shots {
            config.n_shots = v;
        }
        if let Some(v) = self.seed {
            config.seed = v;
        }
        if let Some(v) = &self.states {
            config.states = v.clone();
        }
        if let Some(g) = &self.graph {
            config.graph =
                SpinGraph::new(g.n_sites, &g.edges).map_err(|e| CliError::Config(e.to_string()))?;
        }
        if let Some(m) = &self.reference_method {
            config.reference = match m.as_str() {
                "exact" => ReferenceMethod::ExactEvolution,
                "trotter" => ReferenceMethod::NoiselessTrotter,
                other => {
                    return Err(CliError::Config(format!(
                        "reference_method must be \"exact\" or \"trotter\", got {other:?}"
                    )))
                }
            };
        }
        Ok(config)
    }
}
