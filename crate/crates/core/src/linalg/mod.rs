//! Dense complex matrices and the eigensolvers used throughout the crate.

mod jacobi;
mod matrix;
mod spectrum;
mod tridiag;

pub use jacobi::{hermitian_eigen, hermitian_eigen_with, EigenDecomposition, JacobiConfig};
pub use matrix::{LogDet, Matrix};
pub use spectrum::{
    skew_spectrum, skew_spectrum_values, symmetric_eigen, symmetric_eigenvalues, zero_snap_threshold, SpectrumKind,
    SpectrumSet,
};
