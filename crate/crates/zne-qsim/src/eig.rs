//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Small and dependency-free; accuracy is excellent for the well-scaled
//! Hamiltonians and density matrices handled here (dimension <= a few
//! thousand). Complex Hermitian matrices are handled through the standard
//! real-symmetric embedding `[[X, -Y], [Y, X]]`, which carries each
//! eigenvalue with doubled multiplicity.

use num_complex::Complex64;

const MAX_SWEEPS: usize = 64;

pub(crate) struct SymmetricEigen {
    /// Eigenvalues in the order the diagonal converged (not sorted).
    pub values: Vec<f64>,
    /// Row-major matrix whose column `k` is the eigenvector of `values[k]`.
    pub vectors: Vec<f64>,
}

/// Diagonalize a row-major real symmetric matrix.
pub(crate) fn symmetric_eigen(matrix: &[f64], n: usize) -> SymmetricEigen {
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    jacobi(&mut a, Some(&mut v), n);
    SymmetricEigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
    }
}

/// Smallest eigenvalue of a row-major real symmetric matrix.
pub(crate) fn symmetric_min_eigenvalue(matrix: &[f64], n: usize) -> f64 {
    let mut a = matrix.to_vec();
    jacobi(&mut a, None, n);
    (0..n).map(|i| a[i * n + i]).fold(f64::INFINITY, f64::min)
}

/// Smallest eigenvalue of a row-major complex Hermitian matrix.
pub(crate) fn hermitian_min_eigenvalue(matrix: &[Complex64], dim: usize) -> f64 {
    let n = 2 * dim;
    let mut embed = vec![0.0; n * n];
    for i in 0..dim {
        for j in 0..dim {
            let z = matrix[i * dim + j];
            embed[i * n + j] = z.re;
            embed[i * n + (dim + j)] = -z.im;
            embed[(dim + i) * n + j] = z.im;
            embed[(dim + i) * n + (dim + j)] = z.re;
        }
    }
    symmetric_min_eigenvalue(&embed, n)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let x = a[i * n + j];
            sum += x * x;
        }
    }
    (2.0 * sum).sqrt()
}

fn jacobi(a: &mut [f64], mut vectors: Option<&mut Vec<f64>>, n: usize) {
    if n <= 1 {
        return;
    }
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-14 * frobenius.max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(a, n) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol / (n * n) as f64 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    let new_p = aip - s * (aiq + tau * aip);
                    let new_q = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = new_p;
                    a[p * n + i] = new_p;
                    a[i * n + q] = new_q;
                    a[q * n + i] = new_q;
                }
                if let Some(v) = vectors.as_deref_mut() {
                    for i in 0..n {
                        let vip = v[i * n + p];
                        let viq = v[i * n + q];
                        v[i * n + p] = vip - s * (viq + tau * vip);
                        v[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }
}
