//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use super::matrix::{DenseMatrix, RealSymMatrix};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 64;
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct Eigen {
    /// ascending
    pub values: Vec<f64>,
    /// column `k` is the unit eigenvector for `values[k]`
    pub vectors: DenseMatrix,
    pub sweeps: usize,
}

impl Eigen {
    /// `V diag(values) Vᵀ`
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.values.len();
        DenseMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.vectors[(i, k)] * self.values[k] * self.vectors[(j, k)]).sum()
        })
    }
}

fn off_norm(a: &DenseMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues in ascending order.
pub fn eigen_sym(m: &RealSymMatrix, tol: f64) -> Result<Vec<f64>> {
    eigen_sym_full(m, tol).map(|e| e.values)
}

pub fn eigen_sym_full(m: &RealSymMatrix, tol: f64) -> Result<Eigen> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::ParameterRange(format!("eigen tolerance must be positive, got {tol}")));
    }
    let n = m.dim();
    let mut a = m.as_dense().clone();
    let mut v = DenseMatrix::identity(n);
    let threshold = tol * a.frobenius();
    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off.is_nan() || off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm(&a);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DenseMatrix::from_fn(n, |i, k| v[(i, order[k])]);
    Ok(Eigen { values, vectors, sweeps })
}
