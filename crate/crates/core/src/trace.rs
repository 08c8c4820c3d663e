//! `trace(M^2)` for the Hilbert-type families: an entrywise oracle, the
//! finite closed forms, and the large-N limits of `trace(M^2)/N`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;
use crate::zoo::{build, FamilyKind, MatrixFamily};

/// `trace(M M) = sum_m a_mm^2 + 2 sum_{m<n} a_mn a_nm`, without forming `M M`.
///
/// Only real parts are used. The mirrored pairs are visited in square tiles
/// so the column-wise reads stay in cache.
pub fn trace_sq<T: Real>(m: &Matrix<T>) -> T {
    const TILE: usize = 64;
    let n = m.dim();
    let a = m.as_slice();
    let mut diag = T::zero();
    let mut off = T::zero();
    for i in 0..n {
        let x = a[i * n + i].re;
        diag += x * x;
    }
    for bi in (0..n).step_by(TILE) {
        for bj in (bi..n).step_by(TILE) {
            for i in bi..(bi + TILE).min(n) {
                let start = if bi == bj { i + 1 } else { bj };
                for j in start..(bj + TILE).min(n) {
                    off += a[i * n + j].re * a[j * n + i].re;
                }
            }
        }
    }
    diag + off + off
}

/// `-2 sum_{k=1}^{N-1} (N-k)/k^2`, summed from the small terms up.
pub fn trace_sq_alternating_closed<T: Real>(n: usize) -> T {
    let nn = T::count(n);
    let s: T = (1..n).rev().map(|k| (nn - T::count(k)) / (T::count(k) * T::count(k))).sum();
    -(s + s)
}

/// `-sin^2(pi/N) (N-1) N (N+1) / 3`.
pub fn trace_sq_quant_closed<T: Real>(n: usize) -> T {
    let s = crate::trig::sin_pi_ratio::<T>(1, n as u64);
    let nn = T::count(n);
    -s * s * (nn - T::one()) * nn * (nn + T::one()) / T::lit(3.0)
}

/// `-2 sum_{k=1}^{N-1} (N-k) cos^2(k theta)/k^2`.
pub fn trace_sq_osc_cos_closed<T: Real>(n: usize, theta: T) -> T {
    let nn = T::count(n);
    let s: T = (1..n)
        .rev()
        .map(|k| {
            let kf = T::count(k);
            let c = (kf * theta).cos();
            (nn - kf) * c * c / (kf * kf)
        })
        .sum();
    -(s + s)
}

/// `2 sum_{k=1}^{N-1} (N-k) sin^2(k theta)/k^2 + N theta^2`.
pub fn trace_sq_osc_sin_closed<T: Real>(n: usize, theta: T) -> T {
    let nn = T::count(n);
    let s: T = (1..n)
        .rev()
        .map(|k| {
            let kf = T::count(k);
            let sn = (kf * theta).sin();
            (nn - kf) * sn * sn / (kf * kf)
        })
        .sum();
    s + s + nn * theta * theta
}

fn check_theta<T: Real>(theta: T) -> Result<()> {
    if !(theta >= T::zero() && theta <= T::FRAC_PI_2()) {
        return Err(Error::invalid(format!("theta = {theta} outside [0, pi/2]")));
    }
    Ok(())
}

/// `lim trace(A_N(theta)^2)/N = -(pi^2/3 + theta^2 - pi theta)`.
pub fn limit_cos<T: Real>(theta: T) -> Result<T> {
    check_theta(theta)?;
    let pi = T::PI();
    Ok(-(pi * pi / T::lit(3.0) + theta * theta - pi * theta))
}

/// `lim trace(B_N(theta)^2)/N = pi theta`.
pub fn limit_sin<T: Real>(theta: T) -> Result<T> {
    check_theta(theta)?;
    Ok(T::PI() * theta)
}

/// `lim trace(A_N^2)/N = -pi^2/3`.
pub fn limit_alternating<T: Real>() -> T {
    -T::PI() * T::PI() / T::lit(3.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceReport<T> {
    pub n: usize,
    pub family: MatrixFamily<T>,
    /// Entrywise oracle on the built matrix.
    pub trace_sq_matrix: T,
    /// Finite closed form, where the family has one.
    pub trace_sq_closed: Option<T>,
    /// Limit of `trace/N`, where one is known.
    pub limit_value: Option<T>,
    /// `trace_sq_matrix / n`.
    pub normalized: T,
}

/// Closed finite form for the family, if any.
pub fn closed_form<T: Real>(family: &MatrixFamily<T>) -> Option<T> {
    let n = family.n;
    match family.kind {
        FamilyKind::Alternating => Some(trace_sq_alternating_closed(n)),
        FamilyKind::AlternatingQuant => Some(trace_sq_quant_closed(n)),
        FamilyKind::OscCos => family.theta.map(|t| trace_sq_osc_cos_closed(n, t)),
        FamilyKind::OscSin => family.theta.map(|t| trace_sq_osc_sin_closed(n, t)),
        FamilyKind::PrimeScaled => family.p.map(|p| {
            let l = T::count(p as usize).ln();
            trace_sq_alternating_closed::<T>(n) / (l * l)
        }),
        FamilyKind::SymmetricHilbert | FamilyKind::SymmetricQuant | FamilyKind::CQuant => None,
    }
}

/// Large-N limit of `trace(M^2)/N`, if known.
pub fn limit_value<T: Real>(family: &MatrixFamily<T>) -> Option<T> {
    match family.kind {
        FamilyKind::Alternating | FamilyKind::AlternatingQuant => Some(limit_alternating()),
        FamilyKind::OscCos => family.theta.and_then(|t| limit_cos(t).ok()),
        FamilyKind::OscSin => family.theta.and_then(|t| limit_sin(t).ok()),
        FamilyKind::PrimeScaled => family.p.map(|p| {
            let l = T::count(p as usize).ln();
            limit_alternating::<T>() / (l * l)
        }),
        FamilyKind::SymmetricHilbert | FamilyKind::SymmetricQuant | FamilyKind::CQuant => None,
    }
}

pub fn trace_report<T: Real>(family: &MatrixFamily<T>) -> Result<TraceReport<T>> {
    let m = build(family)?;
    let trace_sq_matrix = trace_sq(&m);
    Ok(TraceReport {
        n: family.n,
        family: *family,
        trace_sq_matrix,
        trace_sq_closed: closed_form(family),
        limit_value: limit_value(family),
        normalized: trace_sq_matrix / T::count(family.n),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferenceCheck<T> {
    pub n: usize,
    pub theta: T,
    /// `trace(B^2) - trace(A^2)` from the built matrices.
    pub left: T,
    /// `2 sum (N-k)/k^2 + theta^2 N`.
    pub right: T,
    pub gap: T,
}

pub fn difference_identity_check<T: Real>(n: usize, theta: T) -> Result<DifferenceCheck<T>> {
    let b = build(&MatrixFamily::osc_sin(n, theta))?;
    let a = build(&MatrixFamily::osc_cos(n, theta))?;
    let left = trace_sq(&b) - trace_sq(&a);
    let right = -trace_sq_alternating_closed::<T>(n) + theta * theta * T::count(n);
    Ok(DifferenceCheck { n, theta, left, right, gap: (left - right).abs() })
}

/// Partial sum `sum_{k=1}^{terms} cos(2 k theta)/k^2`.
pub fn fourier_cos_series<T: Real>(theta: T, terms: usize) -> Result<T> {
    if !(theta > T::zero() && theta <= T::FRAC_PI_2()) {
        return Err(Error::invalid(format!("theta = {theta} outside (0, pi/2]")));
    }
    let two = T::lit(2.0);
    Ok((1..=terms)
        .rev()
        .map(|k| {
            let kf = T::count(k);
            (two * kf * theta).cos() / (kf * kf)
        })
        .sum())
}

/// `pi^2/6 - pi theta + theta^2`, the sum of the cosine series above.
pub fn fourier_cos_closed<T: Real>(theta: T) -> Result<T> {
    if !(theta > T::zero() && theta <= T::FRAC_PI_2()) {
        return Err(Error::invalid(format!("theta = {theta} outside (0, pi/2]")));
    }
    let pi = T::PI();
    Ok(pi * pi / T::lit(6.0) - pi * theta + theta * theta)
}

fn check_x<T: Real>(x: T) -> Result<()> {
    if !(x > T::zero() && x < T::PI() + T::PI()) {
        return Err(Error::invalid(format!("x = {x} outside (0, 2 pi)")));
    }
    Ok(())
}

/// Partial sum `sum_{k=1}^{terms} sin(k x)/k`.
pub fn fourier_sin_series<T: Real>(x: T, terms: usize) -> Result<T> {
    check_x(x)?;
    Ok((1..=terms)
        .rev()
        .map(|k| {
            let kf = T::count(k);
            (kf * x).sin() / kf
        })
        .sum())
}

/// `(pi - x)/2` for `0 < x < 2 pi`.
pub fn fourier_sin_closed<T: Real>(x: T) -> Result<T> {
    check_x(x)?;
    Ok((T::PI() - x) / T::lit(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn oracle_small_cases() {
        assert_eq!(trace_sq(&build(&MatrixFamily::<f64>::alternating(2)).unwrap()), -2.0);
        assert_eq!(trace_sq(&build(&MatrixFamily::osc_sin(5, 0.0)).unwrap()), 0.0);
        assert_eq!(trace_sq(&build(&MatrixFamily::<f64>::symmetric_quant(2)).unwrap()), 2.0);
    }

    #[test]
    fn closed_forms_small_n() {
        assert_eq!(trace_sq_alternating_closed::<f64>(1), 0.0);
        assert_eq!(trace_sq_alternating_closed::<f64>(2), -2.0);
        assert_eq!(trace_sq_alternating_closed::<f64>(3), -4.5);
        assert_eq!(trace_sq_quant_closed::<f64>(1), 0.0);
        assert!((trace_sq_quant_closed::<f64>(2) + 2.0).abs() < 1e-15);
        assert!((trace_sq_quant_closed::<f64>(3) + 6.0).abs() < 1e-14);
        let oracle = trace_sq(&build(&MatrixFamily::<f64>::alternating_quant(3)).unwrap());
        assert!((oracle + 6.0).abs() < 1e-14);
    }

    #[test]
    fn limits() {
        assert!((limit_cos(0.0).unwrap() + PI * PI / 3.0).abs() < 1e-15);
        assert!((limit_cos(FRAC_PI_2).unwrap() + PI * PI / 12.0).abs() < 1e-15);
        assert!((limit_sin(FRAC_PI_2).unwrap() - PI * PI / 2.0).abs() < 1e-15);
        assert!((limit_alternating::<f64>() + 3.289868133696453).abs() < 1e-15);
        assert!(limit_cos(2.0).is_err());
    }

    #[test]
    fn difference_identity_examples() {
        let one = difference_identity_check(1, 0.3f64).unwrap();
        assert!((one.left - 0.09).abs() < 1e-16 && (one.right - 0.09).abs() < 1e-16);
        let two = difference_identity_check(2, 0.0).unwrap();
        assert_eq!((two.left, two.right), (2.0, 2.0));
        assert!(difference_identity_check(50, 1.0).unwrap().gap < 1e-9);
    }

    #[test]
    fn fourier_examples() {
        assert!((fourier_cos_closed(FRAC_PI_2).unwrap() + PI * PI / 12.0).abs() < 1e-15);
        assert_eq!(fourier_sin_closed(PI).unwrap(), 0.0);
        assert!(fourier_sin_series(PI, 1000).unwrap().abs() < 1e-12);
        let leibniz = fourier_sin_series(FRAC_PI_2, 1_000_000).unwrap();
        assert!((leibniz - PI / 4.0).abs() < 2e-6);
        assert!(fourier_sin_series(0.0, 10).is_err());
        assert!(fourier_cos_series(0.0, 10).is_err());
    }

    #[test]
    fn report_fields() {
        let r = trace_report(&MatrixFamily::<f64>::symmetric_hilbert(3)).unwrap();
        assert_eq!(r.trace_sq_closed, None);
        assert_eq!(r.limit_value, None);
        let r = trace_report(&MatrixFamily::<f64>::alternating(4)).unwrap();
        assert_eq!(r.trace_sq_closed, Some(r.trace_sq_matrix));
        assert_eq!(r.normalized, r.trace_sq_matrix / 4.0);
    }
}
