//! Experiment harness for zero-noise extrapolation from mixed
//! physical/logical data on the six-spin transverse-field Ising cluster.
//!
//! [`run_regime_sweep`] simulates every configured initial state through
//! six noise regimes — error-corrected gate error at folds 1/3/5, then the
//! uncorrected error at the same folds — and samples a magnetization
//! estimate per (state, regime) with a deterministic per-task seed.
//! [`extrapolate_subset`] turns regime subsets into per-state zero-noise
//! estimates via Richardson extrapolation, and [`aggregate_statistics`]
//! reduces them to across-state error and variance summaries. Datasets and
//! analysis reports have stable serialized forms in [`io`].

mod aggregate;
mod config;
mod error;
mod extrapolate;
pub mod io;
mod records;
mod sweep;

pub use aggregate::{aggregate_statistics, histogram, AggregateSummary, Histogram, VarianceDistribution};
pub use config::{ReferenceMethod, RegimeSpec, RunConfig};
pub use error::{HarnessError, Result};
pub use extrapolate::{extrapolate_subset, noiseless_reference};
pub use records::{EstimateRecord, ExtrapolationReport};
pub use sweep::{derive_seed, run_regime_sweep};
