//! Dense density-matrix simulator for few-qubit noisy circuits.
//!
//! The simulator evolves `2^n x 2^n` density operators through circuits of
//! `Rx`, `Rz` and `CNOT` gates, each followed by a depolarizing channel on
//! the gate's qubits with that gate's error probability. On top of the raw
//! state machinery it provides:
//!
//! * [`build_trotter_circuit`] — first-order Trotterization of
//!   transverse-field Ising dynamics over an arbitrary coupling graph;
//! * [`fold_circuit`] — global unitary folding `U (U^dagger U)^m`, which
//!   scales the circuit noise level by the odd fold factor without changing
//!   the noiseless computation;
//! * [`exact_evolution`] — a dense matrix-exponential oracle for the same
//!   Hamiltonian, used as the Trotter-error reference;
//! * [`sample_magnetization`] — seeded finite-shot sampling of the mean
//!   magnetization from the state's diagonal.
//!
//! Basis convention: qubit `j` is bit `n - 1 - j` of the basis index, so
//! index bit strings read like kets (`|q0 q1 ...>`). Everything is
//! deterministic: sampling uses a counter-free ChaCha8 stream derived from
//! an explicit seed.

mod circuit;
mod density;
mod eig;
mod error;
mod exact;
mod gate;
mod graph;
mod ops;
mod sampling;
mod trotter;

pub use circuit::{fold_circuit, run_circuit, CircuitSpec};
pub use density::{DensityMatrix, MAX_QUBITS};
pub use error::{QsimError, Result};
pub use exact::exact_evolution;
pub use gate::GateOp;
pub use graph::SpinGraph;
pub use ops::{apply_gate, depolarize};
pub use sampling::{
    basis_magnetization, magnetization_expectation, sample_magnetization, MagnetizationSample,
};
pub use trotter::build_trotter_circuit;
