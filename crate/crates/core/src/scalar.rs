//! Real scalar abstraction shared by the matrix code.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating point type the matrix builders and eigensolvers run on: f32 or f64.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Unit roundoff of the type.
    const EPS: Self;
    /// Default relative residual tolerance for the eigensolvers.
    const DEFAULT_TOL: Self;
    /// Relative off-diagonal threshold at which Jacobi sweeps stop.
    const JACOBI_OFF_TOL: Self;

    fn count(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize fits in float")
    }

    fn int(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("i64 fits in float")
    }

    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 literal fits in float")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {
    const EPS: Self = f32::EPSILON;
    const DEFAULT_TOL: Self = 1e-4;
    const JACOBI_OFF_TOL: Self = 1e-6;
}

impl Real for f64 {
    const EPS: Self = f64::EPSILON;
    const DEFAULT_TOL: Self = 1e-10;
    const JACOBI_OFF_TOL: Self = 1e-12;
}
