use num_complex::Complex64;

use crate::eig::hermitian_min_eigenvalue;
use crate::error::{QsimError, Result};

/// Dense simulation bound: a 12-qubit density matrix already holds
/// 4096 x 4096 complex entries.
pub const MAX_QUBITS: usize = 12;

/// Dense `2^n x 2^n` density operator, stored row-major.
///
/// Qubit `j` corresponds to bit `n - 1 - j` of the basis index, so the
/// index written in binary reads as the ket `|q0 q1 ... q_{n-1}>` from left
/// to right and qubit 0 is the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    dim: usize,
    data: Vec<Complex64>,
}

impl DensityMatrix {
    pub const TRACE_TOLERANCE: f64 = 1e-10;
    pub const HERMITICITY_TOLERANCE: f64 = 1e-10;
    pub const EIGENVALUE_FLOOR: f64 = -1e-9;

    /// Projector onto the computational basis state with the given index.
    pub fn basis_state(n_qubits: usize, basis_index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(QsimError::CapacityExceeded {
                n_qubits,
                max: MAX_QUBITS,
            });
        }
        let dim = 1usize << n_qubits;
        if basis_index >= dim {
            return Err(QsimError::BasisStateOutOfRange {
                index: basis_index,
                dim,
            });
        }
        let mut data = vec![Complex64::ZERO; dim * dim];
        data[basis_index * dim + basis_index] = Complex64::ONE;
        Ok(Self {
            n_qubits,
            dim,
            data,
        })
    }

    /// The maximally mixed state `I / 2^n`.
    pub fn maximally_mixed(n_qubits: usize) -> Result<Self> {
        let mut rho = Self::basis_state(n_qubits, 0)?;
        let fill = Complex64::new(1.0 / rho.dim as f64, 0.0);
        rho.data.fill(Complex64::ZERO);
        for i in 0..rho.dim {
            rho.data[i * rho.dim + i] = fill;
        }
        Ok(rho)
    }

    /// Build from a pure state vector (`rho = psi psi^dagger`).
    pub fn from_pure_state(n_qubits: usize, amplitudes: &[Complex64]) -> Result<Self> {
        let mut rho = Self::basis_state(n_qubits, 0)?;
        if amplitudes.len() != rho.dim {
            return Err(QsimError::BasisStateOutOfRange {
                index: amplitudes.len(),
                dim: rho.dim,
            });
        }
        for i in 0..rho.dim {
            for j in 0..rho.dim {
                rho.data[i * rho.dim + j] = amplitudes[i] * amplitudes[j].conj();
            }
        }
        Ok(rho)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// Bit mask selecting the given qubit inside a basis index.
    pub(crate) fn qubit_mask(&self, qubit: usize) -> usize {
        1usize << (self.n_qubits - 1 - qubit)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// Largest elementwise deviation from `rho = rho^dagger`.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = self.data[i * self.dim + j] - self.data[j * self.dim + i].conj();
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    /// Smallest eigenvalue; the positive-semidefinite check.
    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_min_eigenvalue(&self.data, self.dim)
    }

    /// Real parts of the diagonal, the computational-basis probabilities.
    pub fn diagonal_probabilities(&self) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.data[i * self.dim + i].re)
            .collect()
    }

    /// 2x2 reduced state of one qubit (row-major).
    pub fn qubit_marginal(&self, qubit: usize) -> Result<[Complex64; 4]> {
        if qubit >= self.n_qubits {
            return Err(QsimError::TargetOutOfRange {
                target: qubit,
                n_qubits: self.n_qubits,
            });
        }
        let mask = self.qubit_mask(qubit);
        let mut out = [Complex64::ZERO; 4];
        for i in 0..self.dim {
            if i & mask != 0 {
                continue;
            }
            out[0] += self.get(i, i);
            out[1] += self.get(i, i | mask);
            out[2] += self.get(i | mask, i);
            out[3] += self.get(i | mask, i | mask);
        }
        Ok(out)
    }

    /// Check unit trace, Hermiticity, and positive semidefiniteness against
    /// the crate tolerances.
    pub fn validate(&self) -> Result<()> {
        let trace = self.trace();
        if (trace.re - 1.0).abs() > Self::TRACE_TOLERANCE || trace.im.abs() > Self::TRACE_TOLERANCE
        {
            return Err(QsimError::StateValidation(format!(
                "trace {trace} deviates from one"
            )));
        }
        let herm = self.hermiticity_error();
        if herm > Self::HERMITICITY_TOLERANCE {
            return Err(QsimError::StateValidation(format!(
                "hermiticity error {herm:e}"
            )));
        }
        let min = self.min_eigenvalue();
        if min < Self::EIGENVALUE_FLOOR {
            return Err(QsimError::StateValidation(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(())
    }
}
