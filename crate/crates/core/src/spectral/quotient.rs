use serde::{Deserialize, Serialize};

use super::matrix::{DenseMatrix, RealSymMatrix};
use crate::error::{Error, Result};
use crate::group::VertexPartition;

#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    pub matrix: DenseMatrix,
    pub equitable: bool,
    pub max_row_sum_deviation: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct QuotientDoc {
    dim: usize,
    entries: Vec<Vec<f64>>,
    equitable: bool,
    max_row_sum_deviation: f64,
}

impl Serialize for QuotientMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuotientDoc {
            dim: self.matrix.dim(),
            entries: self.matrix.rows(),
            equitable: self.equitable,
            max_row_sum_deviation: self.max_row_sum_deviation,
        }
        .serialize(s)
    }
}

/// Block-average row sums of `m` under `p`.
pub fn equitable_quotient(m: &RealSymMatrix, p: &VertexPartition, tol: f64) -> Result<QuotientMatrix> {
    if p.len() != m.dim() {
        return Err(Error::PartitionMismatch(format!(
            "partition covers {} indices, matrix has dimension {}",
            p.len(),
            m.dim()
        )));
    }
    let k = p.num_classes();
    let classes = p.classes();
    let mut q = DenseMatrix::zeros(k);
    let mut dev: f64 = 0.0;
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            let sums: Vec<f64> = ci.iter().map(|&r| cj.iter().map(|&c| m[(r, c)]).sum()).collect();
            let mean = sums.iter().sum::<f64>() / sums.len() as f64;
            dev = sums.iter().fold(dev, |d, s| d.max((s - mean).abs()));
            q[(i, j)] = mean;
        }
    }
    Ok(QuotientMatrix { matrix: q, equitable: dev <= tol, max_row_sum_deviation: dev })
}
