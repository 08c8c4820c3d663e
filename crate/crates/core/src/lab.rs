//! Numerical experiments on the spectra: lattice fits, quantized-family
//! reproduction, the Szegő density and moment tests, and spectral radii.
//!
//! Everything here is double precision.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::exact;
use crate::linalg::{skew_spectrum, skew_spectrum_values, symmetric_eigenvalues, SpectrumSet};
use crate::scalar::Real;
use crate::zoo::{build, FamilyKind, MatrixFamily};

const TOL: f64 = <f64 as Real>::DEFAULT_TOL;

/// Positive-branch eigenvalues compared with a lattice model.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub n: usize,
    /// The lattice formula, e.g. `(2pi/n)(k-1/2)`.
    pub model: String,
    /// `mu_k - model_k` for `k = 1..=positive_branch.len()`.
    pub deviations: Vec<f64>,
    pub max_abs: f64,
    pub rms: f64,
    pub zero_present: bool,
    /// 1-based inclusive index window used for the interior statistics.
    pub interior_first: usize,
    pub interior_last: usize,
    pub interior_max_abs: f64,
    pub interior_rms: f64,
    /// `interior_rms` divided by the lattice spacing.
    pub interior_rms_relative: f64,
}

fn rms(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    (xs.iter().map(|x| x * x).sum::<f64>() / xs.len() as f64).sqrt()
}

fn max_abs(xs: &[f64]) -> f64 {
    xs.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn lattice_fit(
    n: usize,
    spectrum: &SpectrumSet<f64>,
    model: String,
    spacing: f64,
    model_k: impl Fn(usize) -> f64,
    window: (usize, usize),
) -> FitReport {
    let deviations: Vec<f64> =
        spectrum.positive_branch.iter().enumerate().map(|(i, mu)| mu - model_k(i + 1)).collect();
    let len = deviations.len();
    let (first, last) = (window.0.max(1).min(len), window.1.min(len));
    let interior: &[f64] = if len == 0 || first > last { &[] } else { &deviations[first - 1..last] };
    let interior_rms = rms(interior);
    FitReport {
        n,
        model,
        max_abs: max_abs(&deviations),
        rms: rms(&deviations),
        zero_present: spectrum.zero_count > 0,
        interior_first: first,
        interior_last: last,
        interior_max_abs: max_abs(interior),
        interior_rms,
        interior_rms_relative: interior_rms / spacing,
        deviations,
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Fits the positive branch of the alternating segment to `(2pi/n)(k-1/2)`
/// (even `n`) or `(2pi/n)k` (odd `n`). The interior window is the middle
/// half of the branch, `k` in `[n/8, 3n/8]`.
pub fn conjecture1_fit(n: usize) -> Result<FitReport> {
    require(n >= 2, || format!("n = {n} must be at least 2"))?;
    let spectrum = skew_spectrum(&build(&MatrixFamily::<f64>::alternating(n))?, TOL)?;
    let h = 2.0 * PI / n as f64;
    let lo = (n / 8).max(1);
    let window = (lo, (3 * n / 8).max(lo));
    Ok(if n.is_multiple_of(2) {
        lattice_fit(n, &spectrum, "(2pi/n)(k-1/2)".into(), h, |k| h * (k as f64 - 0.5), window)
    } else {
        lattice_fit(n, &spectrum, "(2pi/n)k".into(), h, |k| h * k as f64, window)
    })
}

/// Whether the alternating segment of size `n` has a zero eigenvalue.
pub fn alternating_has_zero(n: usize) -> Result<bool> {
    Ok(skew_spectrum_values(&build(&MatrixFamily::<f64>::alternating(n))?, TOL)?.zero_count > 0)
}

/// Numeric spectrum of one family against its closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub n: usize,
    pub max_eigenvalue_gap: f64,
    pub pass: bool,
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Sorted numeric spectrum of the alternating quantized matrix versus
/// `2i sin(pi/n)(k-(n+1)/2)`; passes when every gap is at most `tol`.
pub fn conjecture2_check(n: usize, tol: f64) -> Result<GapReport> {
    let spectrum = skew_spectrum(&build(&MatrixFamily::<f64>::alternating_quant(n))?, TOL)?;
    let predicted = exact::alt_quant_spectrum::<f64>(n)?.sorted_components();
    let gap = max_gap(&spectrum.signed_values(), &predicted);
    Ok(GapReport { n, max_eigenvalue_gap: gap, pass: gap <= tol })
}

/// Symmetric and cosecant quantized families, and both eigenvector identities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantFamilyReport {
    pub n: usize,
    pub symmetric_gap: f64,
    pub c_gap: f64,
    /// `max |A P - P D|`.
    pub p_residual: f64,
    /// `max |C Q - Q D'|`.
    pub q_residual: f64,
    pub pass: bool,
}

/// Tolerances: `symmetric_gap <= 1e-8`, `c_gap <= 1e-7`, residuals `<= 1e-10 n`.
pub fn quant_family_check(n: usize) -> Result<QuantFamilyReport> {
    let s = symmetric_eigenvalues(&build(&MatrixFamily::<f64>::symmetric_quant(n))?, TOL)?;
    let symmetric_gap = max_gap(&s, &exact::symmetric_quant_spectrum::<f64>(n)?.sorted_components());
    let c_matrix = build(&MatrixFamily::<f64>::c_quant(n))?;
    let c = symmetric_eigenvalues(&c_matrix, TOL)?;
    let c_gap = max_gap(&c, &exact::c_quant_spectrum::<f64>(n)?.sorted_components());
    let a = build(&MatrixFamily::<f64>::alternating_quant(n))?;
    let p_residual = exact::eigen_identity_residual(&a, &exact::build_p(n)?, &exact::build_d(n)?)?;
    let q_residual = exact::eigen_identity_residual(&c_matrix, &exact::build_q(n)?, &exact::build_dprime(n)?)?;
    let res_tol = 1e-10 * n as f64;
    let pass = symmetric_gap <= 1e-8 && c_gap <= 1e-7 && p_residual <= res_tol && q_residual <= res_tol;
    Ok(QuantFamilyReport { n, symmetric_gap, c_gap, p_residual, q_residual, pass })
}

/// Eigenvalue counts in the two accumulation regions of the oscillating families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitReport {
    pub n: usize,
    pub theta: f64,
    pub minor_count: usize,
    pub major_count: usize,
    pub zero_count: usize,
    /// `floor(theta n / pi)`.
    pub predicted_minor: usize,
    /// `floor((1 - theta/pi) n)`.
    pub predicted_major: usize,
    /// Number of eigenvalues the limit density puts in the minor region.
    pub expected_minor_region: f64,
    /// Kolmogorov-Smirnov distance to the limit law; absent when the law is atomic.
    pub ks_distance: Option<f64>,
}

fn check_theta(theta: f64) -> Result<()> {
    require((0.0..=PI / 2.0).contains(&theta), || format!("theta = {theta} outside [0, pi/2]"))
}

fn floor_count(x: f64) -> usize {
    // guard against x = 49.999999... from theta = pi/4 style inputs
    (x + 1e-9).floor().max(0.0) as usize
}

/// Splits the spectrum of `i A_n(theta)`: `minor_count = #{0 < |x| <= theta}`,
/// `major_count = #{|x| > theta}`, plus the KS distance of all signed
/// eigenvalues to the density `m(x)/2pi`.
pub fn conjecture3_split(n: usize, theta: f64) -> Result<SplitReport> {
    require(n >= 2, || format!("n = {n} must be at least 2"))?;
    check_theta(theta)?;
    let spectrum = skew_spectrum_values(&build(&MatrixFamily::osc_cos(n, theta))?, TOL)?;
    let values = spectrum.signed_values();
    let minor_count = values.iter().filter(|x| **x != 0.0 && x.abs() <= theta).count();
    let major_count = values.iter().filter(|x| x.abs() > theta).count();
    let nf = n as f64;
    Ok(SplitReport {
        n,
        theta,
        minor_count,
        major_count,
        zero_count: spectrum.zero_count,
        predicted_minor: floor_count(theta * nf / PI),
        predicted_major: floor_count((1.0 - theta / PI) * nf),
        expected_minor_region: 2.0 * theta * nf / PI,
        ks_distance: Some(ks_distance(&values, |x| density_cdf_cos(theta, x))),
    })
}

/// Near-pi window half-width for the sine family.
pub const NEAR_PI_WINDOW: f64 = PI / 2.0;

/// Splits the spectrum of `B_n(theta)`: `minor_count` counts eigenvalues
/// within `NEAR_PI_WINDOW` of pi, `major_count` the rest (near zero).
pub fn conjecture3_sin_split(n: usize, theta: f64) -> Result<SplitReport> {
    require(n >= 2, || format!("n = {n} must be at least 2"))?;
    check_theta(theta)?;
    let values = symmetric_eigenvalues(&build(&MatrixFamily::osc_sin(n, theta))?, TOL)?;
    let minor_count = values.iter().filter(|x| (*x - PI).abs() < NEAR_PI_WINDOW).count();
    let predicted_minor = floor_count(theta * n as f64 / PI);
    Ok(SplitReport {
        n,
        theta,
        minor_count,
        major_count: n - minor_count,
        zero_count: 0,
        predicted_minor,
        predicted_major: n - predicted_minor,
        expected_minor_region: theta * n as f64 / PI,
        ks_distance: None,
    })
}

/// `sup |F_emp - F|` for a continuous reference CDF.
pub fn ks_distance(values: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut xs = values.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter().enumerate().fold(0.0, |d, (i, &x)| {
        let f = cdf(x);
        d.max(f - i as f64 / n).max((i + 1) as f64 / n - f)
    })
}

/// Length of `[a, b] ∩ (-inf, x]`.
fn covered(a: f64, b: f64, x: f64) -> f64 {
    (x.min(b) - a).max(0.0)
}

/// CDF of `m(x)/2pi` on `[-pi, pi]`.
pub fn density_cdf_cos(theta: f64, x: f64) -> f64 {
    let outer = PI - theta;
    let mass = 2.0 * covered(-theta, theta, x) + covered(-outer, -theta, x) + covered(theta, outer, x);
    (mass / (2.0 * PI)).clamp(0.0, 1.0)
}

fn check_symbol_args(theta: f64, x: f64, lo: f64, hi: f64) -> Result<()> {
    check_theta(theta)?;
    require(x >= lo && x < hi, || format!("x = {x} outside [{lo}, {hi})"))
}

/// Symbol of `i A_n(theta)` on `[0, 2pi)`; breakpoints take the right limit.
pub fn szego_symbol_cos(theta: f64, x: f64) -> Result<f64> {
    check_symbol_args(theta, x, 0.0, 2.0 * PI)?;
    Ok(if x < theta {
        x
    } else if x < 2.0 * PI - theta {
        x - PI
    } else {
        x - 2.0 * PI
    })
}

/// Multiplicity `m(x)` on `[-pi, pi]`; breakpoints take the right limit.
pub fn szego_density_cos(theta: f64, x: f64) -> Result<u8> {
    check_theta(theta)?;
    require((-PI..=PI).contains(&x), || format!("x = {x} outside [-pi, pi]"))?;
    let outer = PI - theta;
    Ok(if x < -outer || x >= outer {
        0
    } else if x < -theta || x >= theta {
        1
    } else {
        2
    })
}

/// Symbol of `B_n(theta)` on `[0, 2pi)`; breakpoints take the right limit.
pub fn szego_symbol_sin(theta: f64, x: f64) -> Result<f64> {
    check_symbol_args(theta, x, 0.0, 2.0 * PI)?;
    Ok(if x < theta || x >= 2.0 * PI - theta { PI } else { 0.0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SzegoCase {
    Cos,
    Sin,
}

impl SzegoCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SzegoCase::Cos => "cos",
            SzegoCase::Sin => "sin",
        }
    }
}

impl FromStr for SzegoCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cos" => Ok(SzegoCase::Cos),
            "sin" => Ok(SzegoCase::Sin),
            _ => Err(Error::invalid(format!("unknown case {s:?} (expected cos or sin)"))),
        }
    }
}

/// Test function for eigenvalue averages.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestFunction {
    Sq,
    Quartic,
    Abs,
    /// Indicator of the closed interval `[a, b]`.
    Indicator { a: f64, b: f64 },
}

impl TestFunction {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            TestFunction::Sq => x * x,
            TestFunction::Quartic => x.powi(4),
            TestFunction::Abs => x.abs(),
            TestFunction::Indicator { a, b } => f64::from(u8::from(a <= x && x <= b)),
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestFunction::Sq => f.write_str("sq"),
            TestFunction::Quartic => f.write_str("quartic"),
            TestFunction::Abs => f.write_str("abs"),
            TestFunction::Indicator { a, b } => write!(f, "indicator[{a},{b}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentReport {
    pub n: usize,
    pub theta: f64,
    pub case: SzegoCase,
    pub function: TestFunction,
    /// Mean of `F` over the eigenvalues.
    pub empirical: f64,
    /// Limit predicted from the symbol.
    pub predicted: f64,
    pub gap: f64,
}

const QUADRATURE_PANELS: usize = 100_000;

/// Composite midpoint rule, with panels shared out by sub-interval length.
fn midpoint(f: impl Fn(f64) -> f64, breaks: &[f64]) -> f64 {
    let total = breaks[breaks.len() - 1] - breaks[0];
    breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| {
            let panels = ((QUADRATURE_PANELS as f64 * (w[1] - w[0]) / total).round() as usize).max(1);
            let h = (w[1] - w[0]) / panels as f64;
            h * (0..panels).map(|i| f(w[0] + (i as f64 + 0.5) * h)).sum::<f64>()
        })
        .sum()
}

/// `(1/2pi) int_0^2pi F(f(x)) dx` for the cosine symbol, or the two-atom
/// limit `(theta/pi) F(pi) + ((pi-theta)/pi) F(0)` for the sine symbol.
pub fn szego_prediction(case: SzegoCase, theta: f64, function: TestFunction) -> Result<f64> {
    check_theta(theta)?;
    Ok(match case {
        SzegoCase::Cos => {
            let breaks = [0.0, theta, 2.0 * PI - theta, 2.0 * PI];
            let symbol = |x: f64| if x < theta {
                x
            } else if x < 2.0 * PI - theta {
                x - PI
            } else {
                x - 2.0 * PI
            };
            midpoint(|x| function.eval(symbol(x)), &breaks) / (2.0 * PI)
        }
        SzegoCase::Sin => theta / PI * function.eval(PI) + (PI - theta) / PI * function.eval(0.0),
    })
}

/// Mean of `F` over the eigenvalues of `i A_n(theta)` (cos) or `B_n(theta)`
/// (sin), against the Szegő limit.
pub fn szego_moment_test(n: usize, theta: f64, case: SzegoCase, function: TestFunction) -> Result<MomentReport> {
    require(n >= 2, || format!("n = {n} must be at least 2"))?;
    check_theta(theta)?;
    if let TestFunction::Indicator { a, b } = function {
        require(a <= b, || format!("indicator bounds [{a}, {b}] are reversed"))?;
    }
    let values = match case {
        SzegoCase::Cos => skew_spectrum_values(&build(&MatrixFamily::osc_cos(n, theta))?, TOL)?.signed_values(),
        SzegoCase::Sin => symmetric_eigenvalues(&build(&MatrixFamily::osc_sin(n, theta))?, TOL)?,
    };
    let empirical = values.iter().map(|&x| function.eval(x)).sum::<f64>() / n as f64;
    let predicted = szego_prediction(case, theta, function)?;
    Ok(MomentReport { n, theta, case, function, empirical, predicted, gap: (empirical - predicted).abs() })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusReport {
    pub n: usize,
    pub family: FamilyKind,
    pub radius: f64,
    /// `radius < pi`.
    pub pass: bool,
}

/// Spectral radius of the alternating or the symmetric Hilbert segment.
pub fn schur_radius_check(n: usize, family: FamilyKind) -> Result<RadiusReport> {
    let radius = match family {
        FamilyKind::Alternating => skew_spectrum_values(&build(&MatrixFamily::alternating(n))?, TOL)?.radius(),
        FamilyKind::SymmetricHilbert => symmetric_eigenvalues(&build(&MatrixFamily::symmetric_hilbert(n))?, TOL)?
            .iter()
            .fold(0.0, |m: f64, x| m.max(x.abs())),
        other => return Err(Error::invalid(format!("radius check is defined for alt and sym-hilbert, not {other}"))),
    };
    Ok(RadiusReport { n, family, radius, pass: radius < PI })
}

/// Spectrum of `n A_n^(p)` fitted to `(2pi/log p) k`. The limit holds index
/// by index, so the interior window is the first ten lattice points.
pub fn prime_limit_check(p: u64, n: usize) -> Result<FitReport> {
    require(n >= 3 && n % 2 == 1, || format!("n = {n} must be odd and at least 3"))?;
    let a = build(&MatrixFamily::<f64>::prime_scaled(n, p))?;
    let scaled = a.scale(Complex::new(n as f64, 0.0));
    let spectrum = skew_spectrum(&scaled, TOL)?;
    let h = 2.0 * PI / (p as f64).ln();
    Ok(lattice_fit(n, &spectrum, format!("(2pi/log {p})k"), h, |k| h * k as f64, (1, 10)))
}
