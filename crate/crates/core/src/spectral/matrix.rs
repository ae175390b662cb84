use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Square dense matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::ParameterRange(format!(
                "row {bad} has {} entries, expected {dim}",
                rows[bad].len()
            )));
        }
        Ok(DenseMatrix { dim, data: rows.concat() })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        DenseMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// `lambda * I - self`
    pub fn shifted(&self, lambda: f64) -> DenseMatrix {
        Self::from_fn(self.dim, |i, j| if i == j { lambda } else { 0.0 } - self[(i, j)])
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Dimension line followed by one comma-separated row per line, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:.16e}")).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let dim: usize = head
            .trim()
            .parse()
            .map_err(|e| Error::Parse { line: 1, msg: format!("bad dimension: {e}") })?;
        let mut rows = Vec::with_capacity(dim);
        for (k, line) in lines {
            let row: std::result::Result<Vec<f64>, _> = line.split(',').map(|x| x.trim().parse::<f64>()).collect();
            let row = row.map_err(|e| Error::Parse { line: k + 1, msg: e.to_string() })?;
            if row.len() != dim {
                return Err(Error::Parse { line: k + 1, msg: format!("expected {dim} values, got {}", row.len()) });
            }
            rows.push(row);
        }
        if rows.len() != dim {
            return Err(Error::Parse { line: 0, msg: format!("expected {dim} rows, got {}", rows.len()) });
        }
        Self::from_rows(&rows)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Dense matrix that is exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymMatrix(DenseMatrix);

impl RealSymMatrix {
    pub fn new(m: DenseMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::ParameterRange("matrix is not symmetric".into()));
        }
        Ok(RealSymMatrix(m))
    }

    /// Evaluates `f` on the upper triangle only and mirrors it.
    pub fn from_upper(dim: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = DenseMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        RealSymMatrix(m)
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_dense(self) -> DenseMatrix {
        self.0
    }
}

impl std::ops::Index<(usize, usize)> for RealSymMatrix {
    type Output = f64;

    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.0[idx]
    }
}

pub fn sombor_matrix(g: &SimpleGraph) -> RealSymMatrix {
    let deg: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    RealSymMatrix::from_upper(g.vertex_count(), |i, j| {
        if g.adjacent(i, j) {
            deg[i].hypot(deg[j])
        } else {
            0.0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::graph::{GraphKind, Relation};
    use crate::group::{make_group, Family, GroupSpec};

    #[test]
    fn sombor_of_complete_graphs() {
        let s = sombor_matrix(&SimpleGraph::complete(2));
        assert_eq!(s[(0, 1)], 2f64.sqrt());
        assert_eq!(s[(0, 0)], 0.0);
        let m = 5;
        let s = sombor_matrix(&SimpleGraph::complete(m));
        for i in 0..m {
            for j in 0..m {
                let expected = if i == j { 0.0 } else { (m - 1) as f64 * 2f64.sqrt() };
                assert!((s[(i, j)] - expected).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn sombor_commuting_d6_entry() {
        let g = make_group(GroupSpec { family: Family::Dihedral, n: 3 }).unwrap();
        let s = sombor_matrix(&build_graph(&g, GraphKind::Commuting, Relation::Equality).unwrap());
        assert_eq!(s[(0, 1)], 29f64.sqrt());
        assert!(s.as_dense().is_symmetric());
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let m = DenseMatrix::from_rows(&[vec![1.0 / 3.0, -2.5e-17], vec![std::f64::consts::PI, 0.0]]).unwrap();
        let text = m.to_csv();
        assert!(text.starts_with("2\n"));
        assert_eq!(DenseMatrix::from_csv(&text).unwrap(), m);
        assert!(DenseMatrix::from_csv("2\n1,2\n").is_err());
        assert!(DenseMatrix::from_csv("2\n1,2\n3\n").is_err());
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert!(RealSymMatrix::new(m).is_err());
        assert!(DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0]]).is_err());
    }
}
