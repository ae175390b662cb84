//! Singular values by one-sided (Hestenes) Jacobi. Used to measure the
//! numerical nullity of `λI − Q` for small, possibly non-symmetric `Q`.

use super::matrix::DenseMatrix;

const MAX_SWEEPS: usize = 64;

/// Singular values in descending order.
pub fn singular_values(m: &DenseMatrix) -> Vec<f64> {
    let n = m.dim();
    // columns stored contiguously
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| m[(i, j)]).collect()).collect();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (alpha, beta, gamma) = cols[p].iter().zip(&cols[q]).fold((0.0, 0.0, 0.0), |(a, b, g), (x, y)| {
                    (a + x * x, b + y * y, g + x * y)
                });
                if gamma == 0.0 || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(q);
                for (x, y) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let (u, v) = (*x, *y);
                    *x = c * u - s * v;
                    *y = s * u + c * v;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols.iter().map(|c| c.iter().map(|x| x * x).sum::<f64>().sqrt()).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Number of singular values at or below `threshold`.
pub fn numerical_nullity(m: &DenseMatrix, threshold: f64) -> usize {
    singular_values(m).iter().filter(|&&s| s <= threshold).count()
}
