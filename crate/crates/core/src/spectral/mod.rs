//! Sombor matrices and the numerical linear algebra around them.

mod charpoly;
mod jacobi;
mod lemma21;
mod matrix;
mod quotient;
mod spectrum;
mod svd;

pub use charpoly::{char_poly, eval_poly, eval_scale, poly_from_roots, CHARPOLY_CAP};
pub use jacobi::{eigen_sym, eigen_sym_full, Eigen, DEFAULT_EIGEN_TOL, MAX_SWEEPS};
pub use lemma21::{lemma21_predict, ForcedEigenvalue};
pub use matrix::{sombor_matrix, DenseMatrix, RealSymMatrix};
pub use quotient::{equitable_quotient, QuotientMatrix};
pub use spectrum::{cluster_spectrum, default_cluster_tol, Cluster, SpectrumSummary};
pub use svd::{numerical_nullity, singular_values};
