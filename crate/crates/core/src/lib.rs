//! Sombor spectra of power, enhanced power and commuting graphs (and their
//! order / conjugacy super graphs) over dihedral, generalized quaternion,
//! semidihedral and cyclic groups, together with a harness that checks
//! closed-form spectra against a Jacobi eigensolver.

pub mod closed_form;
pub mod error;
pub mod graph;
pub mod group;
pub mod spectral;

pub use error::{Error, Result};
pub mod verify;
