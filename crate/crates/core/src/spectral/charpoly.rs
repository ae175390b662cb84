//! Characteristic polynomials by the Faddeev–LeVerrier recurrence.

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};

pub const CHARPOLY_CAP: usize = 32;

/// Monic coefficients of `det(xI − m)`, highest power first.
pub fn char_poly(m: &DenseMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    if n > CHARPOLY_CAP {
        return Err(Error::DimensionCap(n, CHARPOLY_CAP));
    }
    let mut coeffs = vec![0.0; n + 1];
    coeffs[0] = 1.0;
    // M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k) / k
    let mut mk = DenseMatrix::zeros(n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            next[(i, i)] += coeffs[k - 1];
        }
        mk = next;
        coeffs[k] = -m.mul(&mk).trace() / k as f64;
    }
    Ok(coeffs)
}

/// Horner evaluation of a highest-power-first coefficient list.
pub fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// Sum of `|c_k| |x|^(deg-k)`: the natural scale for the evaluation error at `x`.
pub fn eval_scale(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x.abs() + c.abs())
}

/// Coefficients of `Π (x − r)`, highest power first.
pub fn poly_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        c.push(0.0);
        for k in (1..c.len()).rev() {
            c[k] -= r * c[k - 1];
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::spectral::sombor_matrix;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn complete_two_and_three() {
        let r = 2f64.sqrt();
        let k2 = sombor_matrix(&SimpleGraph::complete(2));
        assert!(close(&char_poly(k2.as_dense()).unwrap(), &[1.0, 0.0, -2.0], 1e-14));
        let k3 = sombor_matrix(&SimpleGraph::complete(3));
        assert!(close(&char_poly(k3.as_dense()).unwrap(), &[1.0, 0.0, -24.0, -32.0 * r], 1e-12));
    }

    #[test]
    fn non_symmetric() {
        let m = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!(close(&char_poly(&m).unwrap(), &[1.0, -5.0, -2.0], 1e-14));
    }

    #[test]
    fn dimension_cap() {
        assert_eq!(char_poly(&DenseMatrix::zeros(33)), Err(Error::DimensionCap(33, 32)));
        assert_eq!(char_poly(&DenseMatrix::zeros(0)).unwrap(), vec![1.0]);
    }

    #[test]
    fn horner() {
        assert!(eval_poly(&[1.0, 0.0, -2.0], 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(eval_poly(&[1.0, 0.0], 5.0), 5.0);
        assert_eq!(eval_poly(&[], 5.0), 0.0);
        assert_eq!(eval_scale(&[1.0, -3.0, 2.0], -2.0), 4.0 + 6.0 + 2.0);
    }

    #[test]
    fn roots_expand() {
        assert_eq!(poly_from_roots(&[1.0, 2.0]), vec![1.0, -3.0, 2.0]);
        assert_eq!(poly_from_roots(&[]), vec![1.0]);
    }
}
