use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::density::DensityMatrix;
use crate::error::{QsimError, Result};
use crate::exact::z_eigenvalue;

/// Finite-sample magnetization statistics from computational-basis
/// measurements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagnetizationSample {
    /// Sample mean of the per-shot magnetization.
    pub mean: f64,
    /// Unbiased sample variance divided by the shot count: the variance of
    /// the mean.
    pub variance_of_mean: f64,
    pub shots: u64,
}

/// Mean magnetization of a basis state: `(1/n) sum_j (+-1)` with `|0>`
/// counting as spin up.
pub fn basis_magnetization(n_qubits: usize, basis_index: usize) -> f64 {
    let mut sum = 0.0;
    for q in 0..n_qubits {
        sum += z_eigenvalue(basis_index, n_qubits, q);
    }
    sum / n_qubits as f64
}

/// Expectation of the mean magnetization `(1/n) sum_j <sigma^Z_j>`.
///
/// Z observables depend only on the diagonal of the density matrix.
pub fn magnetization_expectation(rho: &DensityMatrix) -> f64 {
    let n = rho.n_qubits();
    rho.diagonal_probabilities()
        .iter()
        .enumerate()
        .map(|(b, p)| p * basis_magnetization(n, b))
        .sum()
}

/// Draw `n_shots` computational-basis outcomes from the diagonal of `rho`
/// and return the sample mean magnetization with its variance of the mean.
///
/// The generator is `ChaCha8Rng` seeded through `SeedableRng::seed_from_u64`
/// (SplitMix64 key expansion), so results are bit-for-bit reproducible for
/// a fixed seed on every platform.
pub fn sample_magnetization(
    rho: &DensityMatrix,
    n_shots: u64,
    seed: u64,
) -> Result<MagnetizationSample> {
    if n_shots < 2 {
        return Err(QsimError::InvalidShotCount(n_shots));
    }
    let n = rho.n_qubits();
    let dim = rho.dim();

    // Tiny negative diagonal entries from round-off are clamped before
    // building the sampling distribution.
    let mut cumulative = Vec::with_capacity(dim);
    let mut total = 0.0_f64;
    for p in rho.diagonal_probabilities() {
        total += p.max(0.0);
        cumulative.push(total);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; dim];
    for _ in 0..n_shots {
        let u: f64 = rng.random::<f64>() * total;
        let outcome = cumulative.partition_point(|&c| c <= u).min(dim - 1);
        counts[outcome] += 1;
    }

    let inv_shots = 1.0 / n_shots as f64;
    let mean: f64 = counts
        .iter()
        .enumerate()
        .map(|(b, &c)| c as f64 * basis_magnetization(n, b))
        .sum::<f64>()
        * inv_shots;
    let sum_sq_dev: f64 = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(b, &c)| {
            let d = basis_magnetization(n, b) - mean;
            c as f64 * d * d
        })
        .sum();
    let sample_variance = sum_sq_dev / (n_shots - 1) as f64;

    Ok(MagnetizationSample {
        mean,
        variance_of_mean: sample_variance * inv_shots,
        shots: n_shots,
    })
}
