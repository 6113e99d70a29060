use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use zne_harness::{
    aggregate_statistics, extrapolate_subset, histogram, io as hio, noiseless_reference,
    run_regime_sweep, RunConfig,
};
use zne_resource::{
    emit_tables, prefactor_all_logical, prefactor_mixed, runtime_ratio, runtime_ratio_idealized,
    RuntimeModel, ScheduleSpec,
};

use crate::error::{CliError, Result};

const HISTOGRAM_BINS: usize = 16;

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
        }
    }
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// `zne tables`: print both resource tables, optionally writing text and
/// CSV files into a directory.
pub fn cmd_tables(gammas: &[f64], orders: &[usize], output: Option<&Path>) -> Result<()> {
    let tables = emit_tables(gammas, orders)?;
    print!("{}", tables.to_text());
    if let Some(dir) = output {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        write_file(&dir.join("tables.txt"), &tables.to_text())?;
        write_file(&dir.join("tau_ratio.csv"), &tables.tau_ratio_csv())?;
        write_file(&dir.join("mixed_variance.csv"), &tables.mixed_variance_csv())?;
        println!(
            "wrote tables.txt, tau_ratio.csv, mixed_variance.csv to {}",
            dir.display()
        );
    }
    Ok(())
}

/// `zne prefactor`: variance prefactors and runtime ratios for one
/// (gamma, order) pair.
pub fn cmd_prefactor(
    gamma: f64,
    order: usize,
    multipliers: Option<&[f64]>,
    runtime: &RuntimeModel,
) -> Result<()> {
    let physical: Vec<f64> = match multipliers {
        Some(m) => {
            if m.len() != order {
                return Err(CliError::Config(format!(
                    "order {order} needs {order} physical multipliers, got {}",
                    m.len()
                )));
            }
            m.to_vec()
        }
        None => (2..=order + 1).map(|m| m as f64).collect(),
    };
    // All-logical schedule: baseline multiplier 1 plus the physical ones.
    let mut logical = vec![1.0];
    logical.extend_from_slice(&physical);

    let p1 = prefactor_all_logical(&logical)?;
    let p2 = prefactor_mixed(gamma, &physical)?;
    let schedule_logical = ScheduleSpec::all_logical(&logical)?;
    let schedule_mixed = ScheduleSpec::mixed(gamma, &physical)?;
    let idealized = runtime_ratio_idealized(&schedule_logical, &schedule_mixed)?;
    let exact = runtime_ratio(&schedule_logical, &schedule_mixed, runtime)?;

    println!("gamma                = {gamma}");
    println!("order K              = {order}");
    println!("all-logical M        = {logical:?}");
    println!("mixed schedule       = anchor {gamma} + {physical:?}");
    println!("prefactor #1         = {p1}");
    println!("prefactor #2         = {p2}");
    println!(
        "tau ratio idealized  = {idealized} (N/N_1 = {})",
        schedule_mixed.n_points()
    );
    println!(
        "tau ratio exact      = {exact} (tau_physical/tau_logical = {})",
        runtime.tau_physical / runtime.tau_logical
    );
    Ok(())
}

/// `zne simulate`: run the regime sweep and write the dataset CSV.
pub fn cmd_simulate(config: &RunConfig, output: &Path) -> Result<()> {
    let records = run_regime_sweep(config)?;
    write_file(output, &hio::dataset_to_csv(&records))?;
    println!("wrote {} records to {}", records.len(), output.display());
    Ok(())
}

/// `zne analyze`: extrapolate dataset subsets, write the JSON report and
/// plot-ready histogram CSVs.
pub fn cmd_analyze(
    dataset_path: &Path,
    subsets: &[Vec<u8>],
    order: usize,
    config: &RunConfig,
    output: &Path,
) -> Result<()> {
    let text = std::fs::read_to_string(dataset_path).map_err(|e| CliError::io(dataset_path, e))?;
    let records = hio::parse_dataset_csv(&text)?;
    if records.is_empty() {
        return Err(CliError::Dataset(format!(
            "{} holds no records",
            dataset_path.display()
        )));
    }

    // Reference values for exactly the states present in the dataset.
    let states: BTreeSet<usize> = records.iter().map(|r| r.state).collect();
    let reference_config = RunConfig {
        states: states.iter().copied().collect(),
        ..config.clone()
    };
    let reference = noiseless_reference(&reference_config)?;

    let mut analyses = Vec::with_capacity(subsets.len());
    for subset in subsets {
        let reports = extrapolate_subset(&records, subset, order, &reference)?;
        let summary = aggregate_statistics(&reports)?;
        println!(
            "subset {:?}: mean_error={} error_variance={} mean_variance={}",
            subset, summary.mean_error, summary.error_variance, summary.variance_stats.mean
        );

        let label: Vec<String> = subset.iter().map(u8::to_string).collect();
        let label = label.join("-");
        let errors: Vec<f64> = reports.iter().map(|r| r.error).collect();
        let variances: Vec<f64> = reports.iter().map(|r| r.variance).collect();
        let stem = output.with_extension("");
        let stem = stem.to_string_lossy();
        write_file(
            &PathBuf::from(format!("{stem}_error_hist_{label}.csv")),
            &histogram(&errors, HISTOGRAM_BINS)?.to_csv(),
        )?;
        write_file(
            &PathBuf::from(format!("{stem}_variance_hist_{label}.csv")),
            &histogram(&variances, HISTOGRAM_BINS)?.to_csv(),
        )?;

        analyses.push(hio::SubsetAnalysis {
            subset: subset.clone(),
            summary,
            reports,
        });
    }

    let document = hio::AnalysisDocument::new(order, analyses);
    write_file(output, &document.to_json())?;
    println!("wrote report to {}", output.display());
    Ok(())
}
