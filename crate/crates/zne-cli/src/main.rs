//! `zne` — zero-noise extrapolation toolkit over mixed physical/logical
//! datasets: resource tables, prefactor queries, the six-spin simulation
//! sweep, and dataset extrapolation.

mod commands;
mod config_file;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zne_harness::RunConfig;
use zne_resource::RuntimeModel;

use config_file::CliConfigFile;
use error::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "zne",
    version,
    about = "Zero-noise extrapolation from mixed physical/logical data",
    after_help = "Exit codes: 0 success, 2 config error, 3 i/o error, \
                  4 dataset error, 5 numerical-validation error."
)]
struct Cli {
    /// JSON config file; missing keys fall back to the reference defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed, overriding the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output path (dataset CSV, report JSON, or table directory).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for the simulation sweep (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print (and optionally write) the runtime-ratio and mixed-variance tables.
    Tables {
        /// Suppression factors, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.01, 0.1, 0.5, 0.9])]
        gammas: Vec<f64>,
        /// Polynomial orders, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2, 3, 4, 5])]
        orders: Vec<usize>,
    },
    /// Variance prefactors and runtime ratios for one schedule.
    Prefactor {
        /// Suppression factor gamma = p / p_th.
        #[arg(long)]
        gamma: f64,
        /// Polynomial order K.
        #[arg(long)]
        order: usize,
        /// Physical noise multipliers M_1..M_K (default 2..K+1).
        #[arg(long, value_delimiter = ',')]
        multipliers: Option<Vec<f64>>,
        /// Wall time per logical shot.
        #[arg(long, default_value_t = 1.0)]
        tau_logical: f64,
        /// Wall time per physical shot.
        #[arg(long, default_value_t = 1e-3)]
        tau_physical: f64,
    },
    /// Run the regime sweep and write the dataset CSV.
    Simulate,
    /// Extrapolate dataset subsets and write the JSON report plus
    /// histogram CSVs.
    Analyze {
        /// Dataset CSV produced by `simulate`.
        #[arg(long)]
        dataset: PathBuf,
        /// Regime subsets, e.g. "1,2,3;4,5,6;1,4,5".
        #[arg(long, default_value = "1,2,3;4,5,6;1,4,5")]
        subsets: String,
        /// Richardson polynomial order (subset size minus one).
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    }

    // Precedence: flags over config file over defaults.
    let file = match &cli.config {
        Some(path) => CliConfigFile::load(path)?,
        None => CliConfigFile::default(),
    };
    let mut config: RunConfig = file.apply(RunConfig::default())?;
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }

    match &cli.command {
        Command::Tables { gammas, orders } => {
            commands::cmd_tables(gammas, orders, cli.output.as_deref())
        }
        Command::Prefactor {
            gamma,
            order,
            multipliers,
            tau_logical,
            tau_physical,
        } => {
            let runtime = RuntimeModel::new(*tau_logical, *tau_physical)?;
            commands::cmd_prefactor(*gamma, *order, multipliers.as_deref(), &runtime)
        }
        Command::Simulate => {
            let output = cli
                .output
                .clone()
                .or_else(|| file.output_dataset.clone())
                .unwrap_or_else(|| PathBuf::from("dataset.csv"));
            commands::cmd_simulate(&config, &output)
        }
        Command::Analyze {
            dataset,
            subsets,
            order,
        } => {
            let subsets = parse_subsets(subsets)?;
            let output = cli
                .output
                .clone()
                .or_else(|| file.output_report.clone())
                .unwrap_or_else(|| PathBuf::from("report.json"));
            commands::cmd_analyze(dataset, &subsets, *order, &config, &output)
        }
    }
}

/// Parse `"1,2,3;4,5,6"` into regime subsets.
fn parse_subsets(spec: &str) -> Result<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for group in spec.split(';') {
        let group = group.trim();
        if group.is_empty() {
            continue;
        }
        let mut subset = Vec::new();
        for token in group.split(',') {
            let regime: u8 = token.trim().parse().map_err(|_| {
                CliError::Config(format!("bad regime number {token:?} in subset {group:?}"))
            })?;
            subset.push(regime);
        }
        out.push(subset);
    }
    if out.is_empty() {
        return Err(CliError::Config(format!("no subsets in {spec:?}")));
    }
    Ok(out)
}
