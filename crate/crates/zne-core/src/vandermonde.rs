use crate::error::Result;
use crate::point::NoisePoint;
use crate::validate_schedule;

/// Fit the interpolating polynomial through the points by solving the
/// Vandermonde system directly and return its coefficients
/// `theta_0 ... theta_K` (constant term first).
///
/// This is the cross-check route for [`crate::zero_noise_estimate`]: the
/// constant term `theta_0` is the zero-noise value. The system is solved on
/// levels rescaled by their maximum (the raw Vandermonde matrix becomes
/// ill-conditioned for wide level spreads) and the coefficients are scaled
/// back afterwards.
pub fn polynomial_fit_solve(points: &[NoisePoint]) -> Result<Vec<f64>> {
    let lambdas: Vec<f64> = points.iter().map(|p| p.lambda).collect();
    validate_schedule(&lambdas)?;

    let n = points.len();
    let scale = lambdas.iter().cloned().fold(0.0_f64, f64::max);

    // Row i: [1, x_i, x_i^2, ...] | y_i with x_i = lambda_i / scale.
    let mut aug = vec![0.0_f64; n * (n + 1)];
    for (i, p) in points.iter().enumerate() {
        let x = p.lambda / scale;
        let mut pow = 1.0;
        for j in 0..n {
            aug[i * (n + 1) + j] = pow;
            pow *= x;
        }
        aug[i * (n + 1) + n] = p.mean;
    }

    gauss_solve(&mut aug, n);

    // Undo the rescaling: theta_j = theta_hat_j / scale^j.
    let mut theta = Vec::with_capacity(n);
    let mut denom = 1.0;
    for i in 0..n {
        theta.push(aug[i * (n + 1) + n] / denom);
        denom *= scale;
    }
    Ok(theta)
}

/// Gaussian elimination with partial pivoting on an `n x (n+1)` augmented
/// matrix; the solution ends up in the last column.
fn gauss_solve(aug: &mut [f64], n: usize) {
    let cols = n + 1;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                aug[a * cols + col]
                    .abs()
                    .total_cmp(&aug[b * cols + col].abs())
            })
            .unwrap();
        if pivot_row != col {
            for j in 0..cols {
                aug.swap(col * cols + j, pivot_row * cols + j);
            }
        }
        let pivot = aug[col * cols + col];
        for row in (col + 1)..n {
            let factor = aug[row * cols + col] / pivot;
            aug[row * cols + col] = 0.0;
            for j in (col + 1)..cols {
                aug[row * cols + j] -= factor * aug[col * cols + j];
            }
        }
    }
    for col in (0..n).rev() {
        let mut acc = aug[col * cols + n];
        for j in (col + 1)..n {
            acc -= aug[col * cols + j] * aug[j * cols + n];
        }
        aug[col * cols + n] = acc / aug[col * cols + col];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExtrapolationError;

    fn points_of(pairs: &[(f64, f64)]) -> Vec<NoisePoint> {
        pairs
            .iter()
            .map(|&(x, y)| NoisePoint::new(x, y, 0.0).unwrap())
            .collect()
    }

    #[test]
    fn exact_squares() {
        let theta = polynomial_fit_solve(&points_of(&[(1.0, 1.0), (2.0, 4.0), (3.0, 9.0)])).unwrap();
        for (t, want) in theta.iter().zip([0.0, 0.0, 1.0]) {
            assert!((t - want).abs() < 1e-12, "{theta:?}");
        }
    }

    #[test]
    fn exact_line() {
        let theta = polynomial_fit_solve(&points_of(&[(1.0, 3.0), (2.0, 5.0)])).unwrap();
        assert!((theta[0] - 1.0).abs() < 1e-12);
        assert!((theta[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn random_cubic_round_trip() {
        // Deterministic generate-then-fit check on a handful of cubics.
        let cases = [
            ([0.4, -1.3, 0.7, 0.05], [0.5, 1.5, 2.5, 4.0]),
            ([-2.0, 0.1, -0.3, 1.2], [0.1, 0.9, 3.3, 7.7]),
            ([1.0, 2.0, 3.0, 4.0], [2.0, 4.0, 8.0, 16.0]),
        ];
        for (coeffs, xs) in cases {
            let pts: Vec<NoisePoint> = xs
                .iter()
                .map(|&x| {
                    let y = coeffs[0] + coeffs[1] * x + coeffs[2] * x * x + coeffs[3] * x * x * x;
                    NoisePoint::new(x, y, 0.0).unwrap()
                })
                .collect();
            let theta = polynomial_fit_solve(&pts).unwrap();
            for (t, c) in theta.iter().zip(coeffs) {
                assert!(
                    (t - c).abs() <= 1e-8 * c.abs().max(1.0),
                    "recovered {theta:?} for {coeffs:?}"
                );
            }
        }
    }

    #[test]
    fn reproduces_inputs_at_nodes() {
        let pts = points_of(&[(0.216, -0.43), (2.16, -0.27), (6.48, -0.08)]);
        let theta = polynomial_fit_solve(&pts).unwrap();
        for p in &pts {
            let mut acc = 0.0;
            let mut pow = 1.0;
            for t in &theta {
                acc += t * pow;
                pow *= p.lambda;
            }
            assert!(
                (acc - p.mean).abs() <= 1e-9 * p.mean.abs().max(1.0),
                "poly({}) = {acc}, expected {}",
                p.lambda,
                p.mean
            );
        }
    }

    #[test]
    fn duplicates_rejected() {
        let err = polynomial_fit_solve(&points_of(&[(1.0, 0.0), (1.0, 1.0)])).unwrap_err();
        assert!(matches!(err, ExtrapolationError::DegenerateSchedule { .. }));
    }
}
