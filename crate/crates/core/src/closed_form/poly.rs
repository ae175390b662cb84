//! Small helpers for building claimed polynomials. Coefficients are stored
//! highest power first.

#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    pub fn x() -> Self {
        Poly(vec![1.0, 0.0])
    }

    /// `x − r`
    pub fn linear(r: f64) -> Self {
        Poly(vec![1.0, -r])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(1.0), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * k).collect())
    }

    pub fn coeffs(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::ops::Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        let pad = |p: &Poly, k: usize| if k < len - p.0.len() { 0.0 } else { p.0[k - (len - p.0.len())] };
        Poly((0..len).map(|k| pad(&self, k) - pad(&rhs, k)).collect())
    }
}
