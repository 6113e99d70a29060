//! Resource accounting for zero-noise extrapolation from mixed
//! physical/logical data.
//!
//! Error correction is modeled as a suppression of the per-gate error rate
//! from `p` to `gamma * p` with `gamma = p / p_th`. Extrapolating from
//! `K + 1` estimates amplifies the single-point estimator variance by a
//! schedule-dependent prefactor; this crate computes that prefactor for two
//! schedule families in closed form:
//!
//! * all points error-corrected at levels `M_k * gamma * n * p`
//!   ([`prefactor_all_logical`]), and
//! * one error-corrected anchor at `gamma * n * p` plus `K` uncorrected
//!   points at `M_k * n * p` ([`prefactor_mixed`]).
//!
//! Because logical shots are far slower than physical ones, matching the
//! variance of an all-logical schedule with a mixed schedule can cut wall
//! time by orders of magnitude; [`runtime_ratio`] and
//! [`runtime_ratio_idealized`] quantify the ratio, and [`emit_tables`]
//! tabulates it over a grid of `gamma` and polynomial order.

mod error;
mod model;
mod prefactor;
mod runtime;
mod tables;

pub use error::{ResourceError, Result};
pub use model::{QecModel, RuntimeModel, ScheduleSpec};
pub use prefactor::{prefactor_all_logical, prefactor_mixed};
pub use runtime::{
    geometric_runtime_advantage, runtime_ratio, runtime_ratio_idealized, shots_equivalence_factor,
};
pub use tables::{emit_tables, ResourceTables};
