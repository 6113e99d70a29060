use std::process::ExitCode;

use thiserror::Error;

/// CLI failure classes; each maps to a distinct exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config-file contents, or parameter validation.
    #[error("config error: {0}")]
    Config(String),
    /// Filesystem failures.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Malformed or incomplete dataset files.
    #[error("dataset error: {0}")]
    Dataset(String),
    /// Numerical validation failures (degenerate schedules, state checks).
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_DATASET: u8 = 4;
pub const EXIT_NUMERICAL: u8 = 5;

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Config(_) => ExitCode::from(EXIT_CONFIG),
            CliError::Io { .. } => ExitCode::from(EXIT_IO),
            CliError::Dataset(_) => ExitCode::from(EXIT_DATASET),
            CliError::Numerical(_) => ExitCode::from(EXIT_NUMERICAL),
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

impl From<zne_resource::ResourceError> for CliError {
    fn from(e: zne_resource::ResourceError) -> Self {
        use zne_resource::ResourceError::*;
        match e {
            InvalidInput(_) | NoCorrection { .. } | ScheduleOverlap { .. } => {
                CliError::Config(e.to_string())
            }
            DegenerateSchedule { .. } => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<zne_core::ExtrapolationError> for CliError {
    fn from(e: zne_core::ExtrapolationError) -> Self {
        CliError::Numerical(e.to_string())
    }
}

impl From<zne_qsim::QsimError> for CliError {
    fn from(e: zne_qsim::QsimError) -> Self {
        use zne_qsim::QsimError::*;
        match e {
            StateValidation(_) => CliError::Numerical(e.to_string()),
            ParseError { .. } => CliError::Dataset(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<zne_harness::HarnessError> for CliError {
    fn from(e: zne_harness::HarnessError) -> Self {
        use zne_harness::HarnessError::*;
        match e {
            InvalidConfig(_) => CliError::Config(e.to_string()),
            DatasetParse { .. }
            | UnsupportedFormatVersion(_)
            | IncompleteDataset { .. }
            | MissingReference { .. }
            | InvalidSubset { .. }
            | EmptyInput => CliError::Dataset(e.to_string()),
            Extrapolation(inner) => inner.into(),
            Qsim(inner) => inner.into(),
            Resource(inner) => inner.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
