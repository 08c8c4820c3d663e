//! Spectra of alternating and symmetric Hilbert-type matrices.
//!
//! The matrix code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix it to double precision, which is what every check in the crate
//! is calibrated for.

pub mod cli;
pub mod error;
pub mod exact;
pub mod lab;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod trace;
pub mod trig;
pub mod zeta;
pub mod zoo;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Scalar = num_complex::Complex<f64>;
pub type DenseMatrix = linalg::Matrix<f64>;
pub type EigenDecomposition = linalg::EigenDecomposition<f64>;
pub type SpectrumSet = linalg::SpectrumSet<f64>;
pub type MatrixFamily = zoo::MatrixFamily<f64>;
pub type ClosedFormSpectrum = exact::ClosedFormSpectrum<f64>;
pub type TraceReport = trace::TraceReport<f64>;
