use num_complex::Complex64;

use crate::density::{DensityMatrix, MAX_QUBITS};
use crate::eig::symmetric_eigen;
use crate::error::{QsimError, Result};
use crate::graph::SpinGraph;

/// Exact noiseless evolution `rho(t) = U |i><i| U^dagger` with
/// `U = exp(+i t H)` for the transverse-field Ising Hamiltonian
/// `H = -h sum X_i - J sum_{<ij>} Z_i Z_j`.
///
/// The Hamiltonian is real symmetric in the computational basis, so a dense
/// eigendecomposition gives the evolution without any Trotter error; this
/// is the oracle the Trotterized circuit is checked against and the source
/// of zero-noise reference values.
pub fn exact_evolution(
    graph: &SpinGraph,
    h: f64,
    j_coupling: f64,
    t: f64,
    initial_state: usize,
) -> Result<DensityMatrix> {
    let n = graph.n_sites();
    if n > MAX_QUBITS {
        return Err(QsimError::CapacityExceeded {
            n_qubits: n,
            max: MAX_QUBITS,
        });
    }
    let dim = 1usize << n;
    if initial_state >= dim {
        return Err(QsimError::BasisStateOutOfRange {
            index: initial_state,
            dim,
        });
    }

    let hamiltonian = build_hamiltonian(graph, h, j_coupling);
    let eigen = symmetric_eigen(&hamiltonian, dim);

    // psi_b = sum_k V[b, k] e^{i t lambda_k} V[b0, k].
    let mut psi = vec![Complex64::ZERO; dim];
    for k in 0..dim {
        let phase = Complex64::new(0.0, t * eigen.values[k]).exp();
        let weight = phase * eigen.vectors[initial_state * dim + k];
        for (b, amp) in psi.iter_mut().enumerate() {
            *amp += weight * eigen.vectors[b * dim + k];
        }
    }
    DensityMatrix::from_pure_state(n, &psi)
}

/// Dense real-symmetric Hamiltonian matrix in the computational basis,
/// with qubit `j` on bit `n - 1 - j` and `|0>` the +1 eigenstate of `Z`.
fn build_hamiltonian(graph: &SpinGraph, h: f64, j_coupling: f64) -> Vec<f64> {
    let n = graph.n_sites();
    let dim = 1usize << n;
    let mut matrix = vec![0.0_f64; dim * dim];
    for b in 0..dim {
        let mut zz = 0.0;
        for &(i, j) in graph.edges() {
            let zi = z_eigenvalue(b, n, i);
            let zj = z_eigenvalue(b, n, j);
            zz += zi * zj;
        }
        matrix[b * dim + b] = -j_coupling * zz;
        for q in 0..n {
            let flipped = b ^ (1 << (n - 1 - q));
            matrix[flipped * dim + b] += -h;
        }
    }
    matrix
}

pub(crate) fn z_eigenvalue(basis_index: usize, n_qubits: usize, qubit: usize) -> f64 {
    if basis_index & (1 << (n_qubits - 1 - qubit)) == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::magnetization_expectation;

    #[test]
    fn zero_time_returns_initial_projector() {
        let g = SpinGraph::grid(2, 2).unwrap();
        let rho = exact_evolution(&g, 1.0, 0.5, 0.0, 9).unwrap();
        assert!((rho.get(9, 9).re - 1.0).abs() < 1e-12);
        rho.validate().unwrap();
    }

    #[test]
    fn zero_field_keeps_diagonal_states() {
        // Without the transverse field the Hamiltonian is diagonal, so any
        // basis state only picks up a phase.
        let g = SpinGraph::grid(2, 2).unwrap();
        let rho = exact_evolution(&g, 0.0, 0.5, 1.3, 6).unwrap();
        assert!((rho.get(6, 6).re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn single_spin_rabi_flip() {
        // J = 0, h = 1: U(pi/2) = exp(-i (pi/2) X) maps |0> to -i|1>.
        let g = SpinGraph::new(1, &[]).unwrap();
        let rho = exact_evolution(&g, 1.0, 0.0, std::f64::consts::FRAC_PI_2, 0).unwrap();
        assert!((magnetization_expectation(&rho) + 1.0).abs() < 1e-10);
    }

    #[test]
    fn capacity_bound_enforced() {
        // A 13-site graph exceeds the dense bound.
        let edges: Vec<(usize, usize)> = (0..12).map(|i| (i, i + 1)).collect();
        let g = SpinGraph::new(13, &edges).unwrap();
        assert!(matches!(
            exact_evolution(&g, 1.0, 0.5, 1.0, 0).unwrap_err(),
            QsimError::CapacityExceeded { .. }
        ));
    }
}
