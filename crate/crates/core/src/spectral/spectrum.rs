use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped into `(value, multiplicity)` pairs, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumSummary {
    pub pairs: Vec<Cluster>,
    pub cluster_tol: f64,
    pub dim: usize,
}

impl SpectrumSummary {
    pub fn spectral_radius(&self) -> f64 {
        self.pairs.iter().fold(0.0, |m, c| m.max(c.value.abs()))
    }

    /// Smallest distance between consecutive cluster representatives.
    pub fn min_gap(&self) -> Option<f64> {
        self.pairs.windows(2).map(|w| w[1].value - w[0].value).reduce(f64::min)
    }

    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.pairs.iter().filter(|c| (c.value - value).abs() <= tol).map(|c| c.multiplicity).sum()
    }
}

/// `1e-6 · max(1, ρ)` with `ρ` the largest absolute eigenvalue.
pub fn default_cluster_tol(eigs: &[f64]) -> f64 {
    1e-6 * eigs.iter().fold(1.0f64, |m, x| m.max(x.abs()))
}

/// Greedy left-to-right clustering against the running mean of the open cluster.
pub fn cluster_spectrum(eigs: &[f64], cluster_tol: f64) -> SpectrumSummary {
    let mut pairs: Vec<Cluster> = Vec::new();
    let mut sum = 0.0;
    for &x in eigs {
        if let Some(last) = pairs.last_mut() {
            if (x - last.value).abs() <= cluster_tol {
                sum += x;
                last.multiplicity += 1;
                last.value = sum / last.multiplicity as f64;
                continue;
            }
        }
        sum = x;
        pairs.push(Cluster { value: x, multiplicity: 1 });
    }
    SpectrumSummary { pairs, cluster_tol, dim: eigs.len() }
}
