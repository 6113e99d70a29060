use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::records::ExtrapolationReport;

/// Five-number summary plus mean of the per-state estimator variances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VarianceDistribution {
    pub min: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub max: f64,
    pub mean: f64,
}

/// Across-state statistics of one extrapolation subset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregateSummary {
    pub n_states: usize,
    /// Mean signed extrapolation error over states.
    pub mean_error: f64,
    /// Population variance of the signed error over states.
    pub error_variance: f64,
    pub mean_abs_error: f64,
    pub variance_stats: VarianceDistribution,
}

/// Summarize a set of per-state extrapolation reports.
pub fn aggregate_statistics(reports: &[ExtrapolationReport]) -> Result<AggregateSummary> {
    if reports.is_empty() {
        return Err(HarnessError::EmptyInput);
    }
    let n = reports.len() as f64;
    let mean_error = reports.iter().map(|r| r.error).sum::<f64>() / n;
    let error_variance = reports
        .iter()
        .map(|r| {
            let d = r.error - mean_error;
            d * d
        })
        .sum::<f64>()
        / n;
    let mean_abs_error = reports.iter().map(|r| r.error.abs()).sum::<f64>() / n;

    let mut variances: Vec<f64> = reports.iter().map(|r| r.variance).collect();
    variances.sort_by(f64::total_cmp);
    let mean_variance = variances.iter().sum::<f64>() / n;
    let variance_stats = VarianceDistribution {
        min: variances[0],
        q25: quantile(&variances, 0.25),
        median: quantile(&variances, 0.5),
        q75: quantile(&variances, 0.75),
        max: variances[variances.len() - 1],
        mean: mean_variance,
    };

    Ok(AggregateSummary {
        n_states: reports.len(),
        mean_error,
        error_variance,
        mean_abs_error,
        variance_stats,
    })
}

/// Linear-interpolation quantile of a sorted slice.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = p * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
    }
}

/// Plot-ready histogram with uniform bins over the value range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    /// `n_bins + 1` bin edges.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

pub fn histogram(values: &[f64], n_bins: usize) -> Result<Histogram> {
    if values.is_empty() || n_bins == 0 {
        return Err(HarnessError::EmptyInput);
    }
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    // Degenerate range: one bin of unit width around the common value.
    let (min, max) = if min == max {
        (min - 0.5, max + 0.5)
    } else {
        (min, max)
    };
    let width = (max - min) / n_bins as f64;
    let edges: Vec<f64> = (0..=n_bins).map(|i| min + i as f64 * width).collect();
    let mut counts = vec![0u64; n_bins];
    for &v in values {
        let idx = (((v - min) / width) as usize).min(n_bins - 1);
        counts[idx] += 1;
    }
    Ok(Histogram { edges, counts })
}

impl Histogram {
    /// CSV rendering with header `bin_left,bin_right,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin_left,bin_right,count\n");
        for (i, &count) in self.counts.iter().enumerate() {
            out.push_str(&format!("{},{},{count}\n", self.edges[i], self.edges[i + 1]));
        }
        out
    }
}
