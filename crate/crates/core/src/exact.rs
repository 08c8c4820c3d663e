//! Closed-form spectra of the quantized families, their eigenvector
//! matrices, and the finite root-of-unity and trigonometric sums behind them.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;
use crate::trig::{cos_pi_ratio, sin_pi_ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    /// `2i sin(pi/N) (k - (N+1)/2)`, the alternating quantized family.
    AlternatingQuant,
    /// `(N+1-2k) sin(pi/N)`, the symmetric quantized family.
    SymmetricQuant,
    /// `N+1-2k`, the cosecant Hankel family.
    CQuant,
}

impl SpectrumSource {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumSource::AlternatingQuant => "alt-quant",
            SpectrumSource::SymmetricQuant => "sym-quant",
            SpectrumSource::CQuant => "c-quant",
        }
    }
}

/// Predicted spectrum, listed in formula order `k = 1..=n`.
#[derive(Debug, Clone)]
pub struct ClosedFormSpectrum<T> {
    pub n: usize,
    pub values: Vec<Complex<T>>,
    pub source: SpectrumSource,
}

impl<T: Real> ClosedFormSpectrum<T> {
    /// The component that carries the spectrum (imaginary for the
    /// alternating family, real otherwise), ascending.
    pub fn sorted_components(&self) -> Vec<T> {
        let mut v: Vec<T> = match self.source {
            SpectrumSource::AlternatingQuant => self.values.iter().map(|z| z.im).collect(),
            _ => self.values.iter().map(|z| z.re).collect(),
        };
        v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        v
    }
}

fn require_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::invalid(format!("n = {n} must be at least {min}")));
    }
    Ok(())
}

/// `k - (N+1)/2` as an exact half-integer.
fn centered<T: Real>(k: usize, n: usize) -> T {
    T::int(2 * k as i64 - n as i64 - 1) / T::lit(2.0)
}

pub fn alt_quant_spectrum<T: Real>(n: usize) -> Result<ClosedFormSpectrum<T>> {
    require_n(n, 1)?;
    let s = sin_pi_ratio::<T>(1, n as u64);
    let two = T::lit(2.0);
    let values = (1..=n).map(|k| Complex::new(T::zero(), two * s * centered::<T>(k, n))).collect();
    Ok(ClosedFormSpectrum { n, values, source: SpectrumSource::AlternatingQuant })
}

pub fn symmetric_quant_spectrum<T: Real>(n: usize) -> Result<ClosedFormSpectrum<T>> {
    require_n(n, 1)?;
    let s = sin_pi_ratio::<T>(1, n as u64);
    let values = (1..=n).map(|k| Complex::new(T::int(n as i64 + 1 - 2 * k as i64) * s, T::zero())).collect();
    Ok(ClosedFormSpectrum { n, values, source: SpectrumSource::SymmetricQuant })
}

pub fn c_quant_spectrum<T: Real>(n: usize) -> Result<ClosedFormSpectrum<T>> {
    require_n(n, 1)?;
    let values = (1..=n).map(|k| Complex::new(T::int(n as i64 + 1 - 2 * k as i64), T::zero())).collect();
    Ok(ClosedFormSpectrum { n, values, source: SpectrumSource::CQuant })
}

/// `P[m][n] = exp(i pi m (2n-1) / N)`, 1-based.
pub fn build_p<T: Real>(n: usize) -> Result<Matrix<T>> {
    require_n(n, 1)?;
    let d = n as u64;
    Ok(Matrix::from_fn(n, |i, j| {
        let k = ((i + 1) * (2 * j + 1)) as i64;
        Complex::new(cos_pi_ratio(k, d), sin_pi_ratio(k, d))
    }))
}

/// Diagonal of the closed-form alternating spectrum.
pub fn build_d<T: Real>(n: usize) -> Result<Matrix<T>> {
    Ok(Matrix::from_diagonal(&alt_quant_spectrum::<T>(n)?.values))
}

/// `Q[m][n] = cos(pi (2m-1)(2n-1) / (2N) - pi/4)`, 1-based.
pub fn build_q<T: Real>(n: usize) -> Result<Matrix<T>> {
    require_n(n, 1)?;
    // angle = pi * (2 (2m-1)(2n-1) - N) / (4N)
    let d = 4 * n as u64;
    Ok(Matrix::from_real_fn(n, |i, j| {
        let k = 2 * ((2 * i + 1) * (2 * j + 1)) as i64 - n as i64;
        cos_pi_ratio(k, d)
    }))
}

/// `D'[m][m] = N + 1 - 2m`.
pub fn build_dprime<T: Real>(n: usize) -> Result<Matrix<T>> {
    Ok(Matrix::from_diagonal(&c_quant_spectrum::<T>(n)?.values))
}

/// `max |(A V - V D)_ij|` for an eigen-identity `A V = V D`.
pub fn eigen_identity_residual<T: Real>(a: &Matrix<T>, v: &Matrix<T>, d: &Matrix<T>) -> Result<T> {
    Ok(a.matmul(v)?.sub(&v.matmul(d)?)?.max_abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetQReport {
    pub n: usize,
    pub sign: i8,
    pub log_abs: f64,
    pub predicted_sign: i8,
    pub predicted_log_abs: f64,
    pub pass: bool,
}

/// Compares `det Q_N` with `+-(N/2)^(N/2)`, negative exactly when `N+1` is
/// a multiple of 4. Magnitudes are compared in log space with relative
/// tolerance `1e-8` (absolute near `log|det| = 0`).
pub fn det_q_check(n: usize) -> Result<DetQReport> {
    let q = build_q::<f64>(n)?;
    let det = q.log_abs_det();
    let half = n as f64 / 2.0;
    let predicted_log_abs = half * half.ln();
    let predicted_sign = if (n + 1).is_multiple_of(4) { -1 } else { 1 };
    let gap = (det.log_abs - predicted_log_abs).abs();
    let pass = det.sign() == predicted_sign && gap <= 1e-8 * predicted_log_abs.abs().max(1.0);
    Ok(DetQReport { n, sign: det.sign(), log_abs: det.log_abs, predicted_sign, predicted_log_abs, pass })
}

/// `zeta_N^j` computed from the reduced angle `2 pi j / N`.
fn root_of_unity<T: Real>(j: i64, n: usize) -> Complex<T> {
    Complex::new(cos_pi_ratio(2 * j, n as u64), sin_pi_ratio(2 * j, n as u64))
}

/// `sum_{j=1}^{N-1} 1 / (1 - zeta_N^j)`; closed form `(N-1)/2`.
pub fn rootsum_a<T: Real>(n: usize) -> Result<T> {
    require_n(n, 2)?;
    let one = Complex::new(T::one(), T::zero());
    let s = (1..n as i64).fold(Complex::<T>::zero(), |acc, j| acc + one / (one - root_of_unity::<T>(j, n)));
    Ok(s.re)
}

/// `sum_{j=1}^{N-1} (1 - zeta_N^{kj}) / (1 - zeta_N^j)`; closed form `N-k`.
pub fn rootsum_b<T: Real>(n: usize, k: usize) -> Result<T> {
    require_n(n, 2)?;
    if !(1..n).contains(&k) {
        return Err(Error::invalid(format!("k = {k} outside 1..={}", n - 1)));
    }
    let one = Complex::new(T::one(), T::zero());
    let s = (1..n as i64).fold(Complex::<T>::zero(), |acc, j| {
        acc + (one - root_of_unity::<T>(k as i64 * j, n)) / (one - root_of_unity::<T>(j, n))
    });
    Ok(s.re)
}

/// `sum_{j=1}^{N-1} zeta_N^{kj} / (1 - zeta_N^j)`; closed form `k - (N+1)/2`.
pub fn rootsum_c<T: Real>(n: usize, k: usize) -> Result<Complex<T>> {
    require_n(n, 2)?;
    if !(1..=n).contains(&k) {
        return Err(Error::invalid(format!("k = {k} outside 1..={n}")));
    }
    let one = Complex::new(T::one(), T::zero());
    Ok((1..n as i64).fold(Complex::<T>::zero(), |acc, j| {
        acc + root_of_unity::<T>(k as i64 * j, n) / (one - root_of_unity::<T>(j, n))
    }))
}

fn check_k(n: usize, k: usize) -> Result<()> {
    require_n(n, 2)?;
    if !(1..=n).contains(&k) {
        return Err(Error::invalid(format!("k = {k} outside 1..={n}")));
    }
    Ok(())
}

/// `sum_{j=1}^{N-1} cos(pi j (2k-1) / N) / sin(pi j / N)`; closed form 0.
pub fn trig_sum_cos<T: Real>(n: usize, k: usize) -> Result<T> {
    check_k(n, k)?;
    let d = n as u64;
    let odd = 2 * k as i64 - 1;
    Ok((1..n as i64).map(|j| cos_pi_ratio::<T>(j * odd, d) / sin_pi_ratio::<T>(j, d)).sum())
}

/// `sum_{j=1}^{N-1} sin(pi j (2k-1) / N) / sin(pi j / N)`; closed form `N+1-2k`.
pub fn trig_sum_sin<T: Real>(n: usize, k: usize) -> Result<T> {
    check_k(n, k)?;
    let d = n as u64;
    let odd = 2 * k as i64 - 1;
    Ok((1..n as i64).map(|j| sin_pi_ratio::<T>(j * odd, d) / sin_pi_ratio::<T>(j, d)).sum())
}

/// `sum_{j=1}^{N-1} 1 / sin^2(pi j / N)`; closed form `(N^2-1)/3`.
pub fn cosec_sq_sum<T: Real>(n: usize) -> Result<T> {
    require_n(n, 2)?;
    Ok((1..n as i64)
        .map(|j| {
            let s = sin_pi_ratio::<T>(j, n as u64);
            T::one() / (s * s)
        })
        .sum())
}

/// One numeric sum compared with its closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub n: usize,
    pub k: Option<usize>,
    pub value: f64,
    pub predicted: f64,
    pub gap: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(identity: &'static str, n: usize, k: Option<usize>, value: f64, predicted: f64, tol: f64) -> Self {
        let gap = (value - predicted).abs();
        Self { identity, n, k, value, predicted, gap, pass: gap <= tol }
    }
}

/// Every root-of-unity and trigonometric identity at size `n`, all valid `k`.
pub fn identity_checks(n: usize, tol: f64) -> Result<Vec<IdentityCheck>> {
    require_n(n, 2)?;
    let nf = n as f64;
    let mut out = vec![IdentityCheck::new("rootsum_a", n, None, rootsum_a::<f64>(n)?, (nf - 1.0) / 2.0, tol)];
    for k in 1..n {
        out.push(IdentityCheck::new("rootsum_b", n, Some(k), rootsum_b::<f64>(n, k)?, nf - k as f64, tol));
    }
    for k in 1..=n {
        let c = rootsum_c::<f64>(n, k)?;
        let predicted = k as f64 - (nf + 1.0) / 2.0;
        let mut check = IdentityCheck::new("rootsum_c", n, Some(k), c.re, predicted, tol);
        // the imaginary part must vanish as well
        check.gap = check.gap.max(c.im.abs());
        check.pass = check.gap <= tol;
        out.push(check);
    }
    for k in 1..=n {
        out.push(IdentityCheck::new("trig_sum_cos", n, Some(k), trig_sum_cos::<f64>(n, k)?, 0.0, tol));
        let predicted = nf + 1.0 - 2.0 * k as f64;
        out.push(IdentityCheck::new("trig_sum_sin", n, Some(k), trig_sum_sin::<f64>(n, k)?, predicted, tol));
    }
    out.push(IdentityCheck::new("cosec_sq_sum", n, None, cosec_sq_sum::<f64>(n)?, (nf * nf - 1.0) / 3.0, tol));
    Ok(out)
}
