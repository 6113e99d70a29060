use crate::error::{ResourceError, Result};
use crate::model::ScheduleSpec;
use crate::runtime::runtime_ratio_idealized;

/// Runtime-ratio and mixed-variance grids over `gamma` rows and polynomial
/// order columns.
///
/// The multiplier convention is `M = [1, ..., K+1]` for the all-logical
/// schedule and an anchor at `gamma` plus `M = [2, ..., K+1]` for the mixed
/// schedule, with the idealized runtime limit and `N / N_1 = K + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourceTables {
    pub gammas: Vec<f64>,
    pub orders: Vec<usize>,
    /// `tau_ratio[i][j]` is the idealized `tau_1 / tau_2` at
    /// `gammas[i]`, `orders[j]`.
    pub tau_ratio: Vec<Vec<f64>>,
    /// `mixed_variance[i][j]` is the mixed-schedule variance prefactor
    /// `Var[O(0)] / sigma^2` at `gammas[i]`, `orders[j]`.
    pub mixed_variance: Vec<Vec<f64>>,
}

/// Build both tables on a `gamma x order` grid with the default multiplier
/// convention.
pub fn emit_tables(gammas: &[f64], orders: &[usize]) -> Result<ResourceTables> {
    if gammas.is_empty() || orders.is_empty() {
        return Err(ResourceError::InvalidInput(
            "tables need at least one gamma and one order".into(),
        ));
    }
    for &g in gammas {
        if !(g.is_finite() && g > 0.0 && g < 1.0) {
            return Err(ResourceError::InvalidInput(format!(
                "gamma must lie in (0, 1), got {g}"
            )));
        }
    }
    for &k in orders {
        if k < 1 {
            return Err(ResourceError::InvalidInput("orders must be >= 1".into()));
        }
    }

    let mut tau_ratio = Vec::with_capacity(gammas.len());
    let mut mixed_variance = Vec::with_capacity(gammas.len());
    for &gamma in gammas {
        let mut tau_row = Vec::with_capacity(orders.len());
        let mut var_row = Vec::with_capacity(orders.len());
        for &k in orders {
            let logical_m: Vec<f64> = (1..=k + 1).map(|m| m as f64).collect();
            let physical_m: Vec<f64> = (2..=k + 1).map(|m| m as f64).collect();
            let logical = ScheduleSpec::all_logical(&logical_m)?;
            let mixed = ScheduleSpec::mixed(gamma, &physical_m)?;
            tau_row.push(runtime_ratio_idealized(&logical, &mixed)?);
            var_row.push(crate::prefactor_mixed(gamma, &physical_m)?);
        }
        tau_ratio.push(tau_row);
        mixed_variance.push(var_row);
    }
    Ok(ResourceTables {
        gammas: gammas.to_vec(),
        orders: orders.to_vec(),
        tau_ratio,
        mixed_variance,
    })
}

impl ResourceTables {
    /// CSV rendering of the runtime-ratio table, one cell per row.
    pub fn tau_ratio_csv(&self) -> String {
        render_csv(&self.gammas, &self.orders, &self.tau_ratio)
    }

    /// CSV rendering of the mixed-variance table, one cell per row.
    pub fn mixed_variance_csv(&self) -> String {
        render_csv(&self.gammas, &self.orders, &self.mixed_variance)
    }

    /// Aligned plain-text rendering of both tables.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("runtime ratio tau_1 / tau_2 (idealized limit)\n");
        render_text(&mut out, &self.gammas, &self.orders, &self.tau_ratio);
        out.push('\n');
        out.push_str("mixed-data variance prefactor Var[O(0)] / sigma^2\n");
        render_text(&mut out, &self.gammas, &self.orders, &self.mixed_variance);
        out
    }

    pub fn cell(&self, gamma_index: usize, order_index: usize) -> (f64, f64) {
        (
            self.tau_ratio[gamma_index][order_index],
            self.mixed_variance[gamma_index][order_index],
        )
    }
}

fn render_csv(gammas: &[f64], orders: &[usize], grid: &[Vec<f64>]) -> String {
    let mut out = String::from("gamma,order,value\n");
    for (i, &gamma) in gammas.iter().enumerate() {
        for (j, &order) in orders.iter().enumerate() {
            out.push_str(&format!("{gamma},{order},{}\n", grid[i][j]));
        }
    }
    out
}

fn render_text(out: &mut String, gammas: &[f64], orders: &[usize], grid: &[Vec<f64>]) {
    const CELL: usize = 10;
    out.push_str(&format!("{:>8} ", "gamma"));
    for &k in orders {
        out.push_str(&format!("{:>CELL$} ", format!("K={k}")));
    }
    out.push('\n');
    for (i, &gamma) in gammas.iter().enumerate() {
        out.push_str(&format!("{gamma:>8} "));
        for v in &grid[i] {
            out.push_str(&format!("{:>CELL$} ", format_cell(*v)));
        }
        out.push('\n');
    }
}

fn format_cell(v: f64) -> String {
    if v >= 100.0 {
        format!("{v:.0}")
    } else if v >= 10.0 {
        format!("{v:.1}")
    } else {
        format!("{v:.2}")
    }
}
