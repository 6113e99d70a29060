use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QsimError {
    #[error("qubit {target} out of range for {n_qubits}-qubit system")]
    TargetOutOfRange { target: usize, n_qubits: usize },
    #[error("gate targets must be distinct, qubit {target} repeated")]
    DuplicateTargets { target: usize },
    #[error("error probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("fold factor must be an odd positive integer, got {0}")]
    InvalidFoldFactor(u32),
    #[error("basis state {index} out of range for dimension {dim}")]
    BasisStateOutOfRange { index: usize, dim: usize },
    #[error("{n_qubits} qubits exceed the dense simulation bound of {max}")]
    CapacityExceeded { n_qubits: usize, max: usize },
    #[error("trotterization needs at least one step")]
    InvalidTrotterSteps,
    #[error("depolarizing channel acts on one or two qubits, got {0} targets")]
    InvalidTargetCount(usize),
    #[error("spin graph edge ({site}, {site}) is a self-loop")]
    SelfLoop { site: usize },
    #[error("spin graph edge ({a}, {b}) listed twice")]
    DuplicateEdge { a: usize, b: usize },
    #[error("spin graph site {site} out of range for {n_sites} sites")]
    SiteOutOfRange { site: usize, n_sites: usize },
    #[error("sampling needs at least two shots, got {0}")]
    InvalidShotCount(u64),
    #[error("density matrix validation failed: {0}")]
    StateValidation(String),
    #[error("circuit parse error on line {line}: {message}")]
    ParseError { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, QsimError>;
