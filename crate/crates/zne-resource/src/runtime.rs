use crate::error::{ResourceError, Result};
use crate::model::{RuntimeModel, ScheduleSpec};
use crate::prefactor::{prefactor_all_logical, prefactor_mixed};

/// Shot-count ratio `N_shots,1 / N_shots,2` that equalizes the zero-noise
/// variance of the two-point linear schedules: both points error-corrected
/// at `(gamma n p, 2 gamma n p)` versus the mixed pair `(gamma n p, n p)`.
///
/// Equals `9 ((1 - gamma) / (1 + gamma))^2`, approaching 9 as the
/// correction becomes strong and 0 as `gamma -> 1` (where logical and
/// physical points coincide and the all-logical schedule stops paying a
/// premium).
pub fn shots_equivalence_factor(gamma: f64) -> Result<f64> {
    if !(gamma.is_finite() && gamma > 0.0 && gamma < 1.0) {
        return Err(ResourceError::NoCorrection { gamma });
    }
    let r = (1.0 - gamma) / (1.0 + gamma);
    Ok(9.0 * r * r)
}

/// Physical-runtime ratio `tau_case1 / tau_case2` for the two-point linear
/// case in the limit of negligible physical shot time: the all-logical
/// schedule runs two logical points, the mixed schedule only one, so the
/// advantage is twice the shot-count ratio (18 for `gamma << 1`).
pub fn geometric_runtime_advantage(gamma: f64) -> Result<f64> {
    Ok(2.0 * shots_equivalence_factor(gamma)?)
}

fn prefactor_ratio(logical: &ScheduleSpec, mixed: &ScheduleSpec) -> Result<f64> {
    if logical.n_physical_points() != 0 {
        return Err(ResourceError::InvalidInput(
            "first schedule must be all-logical".into(),
        ));
    }
    if mixed.n_logical_points() == 0 {
        return Err(ResourceError::InvalidInput(
            "mixed schedule needs a logical anchor".into(),
        ));
    }
    if logical.order() != mixed.order() {
        return Err(ResourceError::InvalidInput(format!(
            "schedule orders differ: {} vs {}",
            logical.order(),
            mixed.order()
        )));
    }
    let m = mixed.multipliers();
    let p1 = prefactor_all_logical(logical.multipliers())?;
    let p2 = prefactor_mixed(m[0], &m[1..])?;
    Ok(p1 / p2)
}

/// Exact physical-runtime ratio `tau_1 / tau_2` at equal target variance,
/// with finite per-shot times:
///
/// `tau1/tau2 = (#1/#2) * N tau_logical / (N_0 tau_physical + N_1 tau_logical)`.
pub fn runtime_ratio(
    logical: &ScheduleSpec,
    mixed: &ScheduleSpec,
    runtime: &RuntimeModel,
) -> Result<f64> {
    let shots_ratio = prefactor_ratio(logical, mixed)?;
    let n = mixed.n_points() as f64;
    let n0 = mixed.n_physical_points() as f64;
    let n1 = mixed.n_logical_points() as f64;
    Ok(shots_ratio * n * runtime.tau_logical / (n0 * runtime.tau_physical + n1 * runtime.tau_logical))
}

/// Runtime ratio in the idealized limit `tau_physical / tau_logical -> 0`,
/// where physical shots are free: `(#1/#2) * N / N_1`.
pub fn runtime_ratio_idealized(logical: &ScheduleSpec, mixed: &ScheduleSpec) -> Result<f64> {
    let shots_ratio = prefactor_ratio(logical, mixed)?;
    Ok(shots_ratio * mixed.n_points() as f64 / mixed.n_logical_points() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::RuntimeModel;

    #[test]
    fn shots_factor_limits() {
        assert!((shots_equivalence_factor(1e-9).unwrap() - 9.0).abs() < 1e-6);
        let third = shots_equivalence_factor(1.0 / 3.0).unwrap();
        assert!((third - 2.25).abs() < 1e-12);
        assert!(shots_equivalence_factor(1.0 - 1e-9).unwrap() < 1e-8);
    }

    #[test]
    fn shots_factor_rejects_no_correction() {
        assert!(matches!(
            shots_equivalence_factor(1.0).unwrap_err(),
            ResourceError::NoCorrection { .. }
        ));
        assert!(shots_equivalence_factor(1.5).is_err());
        assert!(shots_equivalence_factor(0.0).is_err());
    }

    #[test]
    fn geometric_advantage_is_eighteen_for_strong_correction() {
        assert!((geometric_runtime_advantage(1e-9).unwrap() - 18.0).abs() < 1e-6);
    }

    #[test]
    fn idealized_linear_ratio_matches_hand_value() {
        let logical = ScheduleSpec::all_logical(&[1.0, 2.0]).unwrap();
        let mixed = ScheduleSpec::mixed(0.1, &[2.0]).unwrap();
        let ratio = runtime_ratio_idealized(&logical, &mixed).unwrap();
        assert!((ratio - 9.0).abs() < 0.05, "{ratio}");
    }

    #[test]
    fn idealized_cubic_ratio_matches_hand_value() {
        let logical = ScheduleSpec::all_logical(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let mixed = ScheduleSpec::mixed(0.01, &[2.0, 3.0, 4.0]).unwrap();
        let ratio = runtime_ratio_idealized(&logical, &mixed).unwrap();
        assert!((ratio - 270.0).abs() < 1.0, "{ratio}");
    }

    #[test]
    fn exact_ratio_converges_monotonically_to_idealized() {
        let logical = ScheduleSpec::all_logical(&[1.0, 2.0, 3.0]).unwrap();
        let mixed = ScheduleSpec::mixed(0.1, &[2.0, 3.0]).unwrap();
        let ideal = runtime_ratio_idealized(&logical, &mixed).unwrap();
        let mut last = 0.0;
        for tau_p in [0.5, 0.1, 1e-2, 1e-4, 1e-8] {
            let exact =
                runtime_ratio(&logical, &mixed, &RuntimeModel::new(1.0, tau_p).unwrap()).unwrap();
            assert!(exact > last, "not monotone at tau_p = {tau_p}");
            assert!(exact < ideal);
            last = exact;
        }
        assert!((last - ideal).abs() < 1e-6 * ideal);
    }

    #[test]
    fn mismatched_orders_rejected() {
        let logical = ScheduleSpec::all_logical(&[1.0, 2.0]).unwrap();
        let mixed = ScheduleSpec::mixed(0.1, &[2.0, 3.0]).unwrap();
        assert!(runtime_ratio_idealized(&logical, &mixed).is_err());
    }
}
