use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("dataset missing regime {regime} for state {state}")]
    IncompleteDataset { state: usize, regime: u8 },
    #[error("no noiseless reference value for state {state}")]
    MissingReference { state: usize },
    #[error("subset must hold {expected} distinct regimes for this order, got {got}")]
    InvalidSubset { expected: usize, got: usize },
    #[error("no reports to aggregate")]
    EmptyInput,
    #[error("dataset parse error on line {line}: {message}")]
    DatasetParse { line: usize, message: String },
    #[error("unsupported dataset format version {0}")]
    UnsupportedFormatVersion(u32),
    #[error(transparent)]
    Extrapolation(#[from] zne_core::ExtrapolationError),
    #[error(transparent)]
    Qsim(#[from] zne_qsim::QsimError),
    #[error(transparent)]
    Resource(#[from] zne_resource::ResourceError),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
