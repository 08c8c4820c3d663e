//! Series evaluation of the constants around the Riemann zeta function at
//! `s = 1/2`, and sums over tabulated zeta zeros.

use std::f64::consts::{LN_2, PI};
use std::path::Path;

use crate::error::{Error, Result};

pub use crate::lab::prime_limit_check;

const EPS: f64 = f64::EPSILON;

/// A constant evaluated from a series, with the number of terms used and a
/// bound on the total error.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialValue {
    pub name: String,
    pub value: f64,
    pub series_terms: usize,
    pub error_bound: f64,
}

/// Term cap for the plain alternating series.
const MAX_ALTERNATING_TERMS: usize = 10_000_000;

/// `sum_{n<terms} (-1)^n / (2n+1)^s`, smallest terms first.
fn odd_alternating(s: i32, terms: usize) -> f64 {
    (0..terms)
        .rev()
        .map(|n| {
            let t = ((2 * n + 1) as f64).powi(-s);
            if n % 2 == 0 { t } else { -t }
        })
        .sum()
}

/// Terms needed so that `(2N+1)^-s <= eps`.
fn odd_terms_for(s: i32, eps: f64) -> usize {
    let n = ((eps.powf(-1.0 / s as f64) - 1.0) / 2.0).ceil();
    (n.max(1.0) as usize).min(MAX_ALTERNATING_TERMS)
}

fn odd_alternating_value(name: String, s: i32, terms: usize) -> SpecialValue {
    let value = odd_alternating(s, terms);
    // first omitted term, plus accumulated rounding
    let tail = ((2 * terms + 1) as f64).powi(-s);
    SpecialValue { name, value, series_terms: terms, error_bound: tail + terms as f64 * EPS * EPS + EPS * value.abs() }
}

/// Catalan's constant `G = sum (-1)^n / (2n+1)^2` to within `eps`.
///
/// Plain partial sums; `error_bound` is the first omitted term. Requests
/// below what the term cap can deliver return the bound actually reached.
pub fn catalan(eps: f64) -> Result<SpecialValue> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::invalid(format!("eps = {eps} must be positive")));
    }
    Ok(odd_alternating_value("catalan".into(), 2, odd_terms_for(2, eps)))
}

/// The first `terms` partial sum of the Catalan series.
pub fn catalan_partial(terms: usize) -> Result<SpecialValue> {
    if terms == 0 {
        return Err(Error::invalid("terms must be at least 1"));
    }
    let mut v = odd_alternating_value("catalan".into(), 2, terms);
    v.error_bound = ((2 * terms + 1) as f64).powi(-2);
    Ok(v)
}

/// Default accuracy for the constants feeding the identities.
pub const DEFAULT_EPS: f64 = 1e-13;

fn check_even(k2: u32) -> Result<()> {
    if !k2.is_multiple_of(2) || !(2..=20).contains(&k2) {
        return Err(Error::invalid(format!("k2 = {k2} must be even with 2 <= k2 <= 20")));
    }
    Ok(())
}

const ZETA_TERMS: usize = 100_000;

/// `zeta(k2)` from `sum_{n<=N} n^-k2` plus the midpoint integral tail
/// `(N+1/2)^(1-k2)/(k2-1)`.
pub fn zeta_even(k2: u32) -> Result<SpecialValue> {
    check_even(k2)?;
    let s = k2 as i32;
    let n = ZETA_TERMS;
    let head: f64 = (1..=n).rev().map(|j| (j as f64).powi(-s)).sum();
    let k = k2 as f64;
    let tail = (n as f64 + 0.5).powf(1.0 - k) / (k - 1.0);
    let value = head + tail;
    // midpoint rule error on the tail is at most |f'(N-1)|/24
    let truncation = k * ((n - 1) as f64).powf(-k - 1.0) / 24.0;
    Ok(SpecialValue {
        name: format!("zeta({k2})"),
        value,
        series_terms: n,
        error_bound: truncation + n as f64 * EPS * EPS + 4.0 * EPS * value,
    })
}

/// `L(k2, chi_-4) = sum (-1)^n / (2n+1)^k2`.
pub fn dirichlet_l_chi4(k2: u32) -> Result<SpecialValue> {
    check_even(k2)?;
    let s = k2 as i32;
    Ok(odd_alternating_value(format!("L({k2},chi_-4)"), s, odd_terms_for(s, DEFAULT_EPS)))
}

/// `alpha_k = -(1/2)(2^2k - 1) zeta(2k) - 2^(2k-1) L(2k, chi_-4) + 2^(2k+1)`.
pub fn alpha(k: u32) -> Result<SpecialValue> {
    if !(1..=10).contains(&k) {
        return Err(Error::invalid(format!("k = {k} outside 1..=10")));
    }
    let z = zeta_even(2 * k)?;
    let l = dirichlet_l_chi4(2 * k)?;
    let p = 2f64.powi(2 * k as i32);
    let cz = 0.5 * (p - 1.0);
    let cl = p / 2.0;
    let value = -cz * z.value - cl * l.value + 2.0 * p;
    Ok(SpecialValue {
        name: format!("alpha_{k}"),
        value,
        series_terms: z.series_terms + l.series_terms,
        error_bound: cz * z.error_bound + cl * l.error_bound + EPS * 2.0 * p,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigammaReport {
    /// `sum_{n>=0} 1/(n+1/4)^2`.
    pub series_value: f64,
    /// `pi^2 + 8 G`.
    pub identity_value: f64,
    pub gap: f64,
    pub terms: usize,
}

const TRIGAMMA_TERMS: usize = 1_000_000;

/// Trigamma at 1/4 from its series (with the midpoint tail `1/(N-1/4)`)
/// against `pi^2 + 8G`.
pub fn trigamma_quarter() -> Result<TrigammaReport> {
    let n = TRIGAMMA_TERMS;
    let head: f64 = (0..n).rev().map(|j| 1.0 / ((j as f64 + 0.25) * (j as f64 + 0.25))).sum();
    let series_value = head + 1.0 / (n as f64 - 0.25);
    let identity_value = PI * PI + 8.0 * catalan(DEFAULT_EPS)?.value;
    Ok(TrigammaReport { series_value, identity_value, gap: (series_value - identity_value).abs(), terms: n })
}

/// Imaginary parts of zeta zeros on the critical line, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ZerosTable {
    pub ordinates: Vec<f64>,
    pub source_path: String,
}

const FIRST_ZERO: f64 = 14.134725;
const BUNDLED: &str = include_str!("../data/zeros100.txt");

impl ZerosTable {
    /// The first 100 zeros shipped with the crate.
    pub fn bundled() -> Self {
        parse_zeros_str(BUNDLED, "<bundled zeros100.txt>").expect("bundled table is valid")
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// A note when the table does not start at the first zero; never an error.
    pub fn sanity_warning(&self) -> Option<String> {
        match self.ordinates.first() {
            Some(&g) if (g - FIRST_ZERO).abs() > 1e-6 => Some(format!(
                "{}: first ordinate {g} is not the first zeta zero {FIRST_ZERO}",
                self.source_path
            )),
            _ => None,
        }
    }
}

/// One ordinate per line; blank lines and `#` comments are skipped.
pub fn parse_zeros_str(text: &str, source: &str) -> Result<ZerosTable> {
    let mut ordinates: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let value: f64 = s.parse().map_err(|e| Error::Parse { line, message: format!("{s:?}: {e}") })?;
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Parse { line, message: format!("ordinate {s} must be positive and finite") });
        }
        if let Some(&previous) = ordinates.last() {
            if value <= previous {
                return Err(Error::NotIncreasing { line, previous, value });
            }
        }
        ordinates.push(value);
    }
    Ok(ZerosTable { ordinates, source_path: source.to_string() })
}

pub fn parse_zeros(path: impl AsRef<Path>) -> Result<ZerosTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_zeros_str(&text, &path.display().to_string())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSum {
    pub partial: f64,
    pub used: usize,
}

/// `sum_rho 1/(rho - 1/2)^k2` over the tabulated zeros and their conjugates,
/// `sum 2 (-1)^(k2/2) / gamma^k2`, summed in table order.
pub fn zero_sum(k2: u32, zeros: &ZerosTable) -> Result<ZeroSum> {
    if k2 == 0 || !k2.is_multiple_of(2) {
        return Err(Error::invalid(format!("k2 = {k2} must be a positive even integer")));
    }
    if zeros.is_empty() {
        return Err(Error::EmptyTable);
    }
    let sign = if (k2 / 2).is_multiple_of(2) { 2.0 } else { -2.0 };
    let partial = zeros.ordinates.iter().map(|g| sign / g.powi(k2 as i32)).sum();
    Ok(ZeroSum { partial, used: zeros.len() })
}

/// Magnitude of the zeros beyond height `t`, estimated with the zero density
/// `log(g/2pi)/2pi`: `(1/pi) t^(1-k2)/(k2-1) (log(t/2pi) + 1/(k2-1))`.
pub fn zero_sum_tail_estimate(k2: u32, t: f64) -> f64 {
    let k = k2 as f64 - 1.0;
    t.powf(-k) / (PI * k) * ((t / (2.0 * PI)).ln() + 1.0 / k)
}

/// `zeta`, `zeta'` and `zeta''` at one real point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaDerivatives {
    pub s: f64,
    pub value: f64,
    pub first: f64,
    pub second: f64,
    pub terms: usize,
    /// Change between the last two accelerated estimates.
    pub error_estimate: f64,
}

const ETA_MAX_TERMS: usize = 4096;

/// Euler transform of the partial sums: repeated pairwise averaging.
fn averaged(mut sums: Vec<f64>) -> f64 {
    while sums.len() > 1 {
        for i in 0..sums.len() - 1 {
            sums[i] = 0.5 * (sums[i] + sums[i + 1]);
        }
        sums.pop();
    }
    sums[0]
}

/// Eta, eta' and eta'' from `terms` terms of the alternating series.
fn eta_estimates(s: f64, terms: usize) -> [f64; 3] {
    let mut partial = [0.0f64; 3];
    let mut sums = [Vec::with_capacity(terms), Vec::with_capacity(terms), Vec::with_capacity(terms)];
    for j in 1..=terms {
        let l = (j as f64).ln();
        let base = (-s * l).exp();
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        partial[0] += sign * base;
        partial[1] -= sign * l * base;
        partial[2] += sign * l * l * base;
        for d in 0..3 {
            sums[d].push(partial[d]);
        }
    }
    let [a, b, c] = sums;
    [averaged(a), averaged(b), averaged(c)]
}

/// `zeta(s) = eta(s) / (1 - 2^(1-s))` and its first two derivatives for
/// real `s > 0`, `s != 1`. The eta series is accelerated by the Euler
/// transform; terms double until successive estimates agree to `tol`
/// (relative to `max(1, |value|)`).
pub fn zeta_with_derivatives(s: f64, tol: f64) -> Result<ZetaDerivatives> {
    if !s.is_finite() || s <= 0.0 || s == 1.0 {
        return Err(Error::invalid(format!("s = {s} must be positive and not 1")));
    }
    let mut terms = 16;
    let mut prev = eta_estimates(s, terms);
    loop {
        terms *= 2;
        let cur = eta_estimates(s, terms);
        let change = (0..3).fold(0.0f64, |m, d| m.max((cur[d] - prev[d]).abs() / cur[d].abs().max(1.0)));
        if change <= tol {
            return Ok(finish(s, cur, terms, change));
        }
        if terms >= ETA_MAX_TERMS {
            return Err(Error::NoConvergence { sweeps: terms, residual: change });
        }
        prev = cur;
    }
}

fn finish(s: f64, eta: [f64; 3], terms: usize, change: f64) -> ZetaDerivatives {
    let p = (LN_2 * (1.0 - s)).exp();
    let g = 1.0 - p;
    let g1 = p * LN_2;
    let g2 = -p * LN_2 * LN_2;
    let u = 1.0 / g;
    let u1 = -g1 / (g * g);
    let u2 = (2.0 * g1 * g1 - g * g2) / (g * g * g);
    let [e0, e1, e2] = eta;
    ZetaDerivatives {
        s,
        value: e0 * u,
        first: e1 * u + e0 * u1,
        second: e2 * u + 2.0 * e1 * u1 + e0 * u2,
        terms,
        error_estimate: change,
    }
}

/// `(zeta'/zeta)'(1/2) = (zeta'' zeta - zeta'^2) / zeta^2`.
pub fn zeta_log_deriv2_half() -> Result<SpecialValue> {
    let z = zeta_with_derivatives(0.5, 1e-14)?;
    let value = (z.second * z.value - z.first * z.first) / (z.value * z.value);
    Ok(SpecialValue {
        name: "(zeta'/zeta)'(1/2)".into(),
        value,
        series_terms: z.terms,
        error_bound: (z.error_estimate * 100.0).max(EPS * value.abs() * 100.0),
    })
}

/// The zero-sum identity with `k = 1`, evaluated on a truncated table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroIdentityReport {
    /// Sum over the table, `-2 sum 1/gamma^2`.
    pub partial: f64,
    pub used: usize,
    /// `(zeta'/zeta)'(1/2)`.
    pub log_deriv2: f64,
    /// `-(zeta'/zeta)'(1/2) - pi^2/4 - 2G + 8`.
    pub rhs: f64,
    pub gap: f64,
    /// Estimated contribution of the zeros beyond the table.
    pub truncation_error: f64,
    /// The truncation estimate accounts for the gap.
    pub pass: bool,
}

pub fn zero_identity_check(zeros: &ZerosTable) -> Result<ZeroIdentityReport> {
    let sum = zero_sum(2, zeros)?;
    let log_deriv2 = zeta_log_deriv2_half()?.value;
    let g = catalan(DEFAULT_EPS)?.value;
    let rhs = -log_deriv2 - PI * PI / 4.0 - 2.0 * g + 8.0;
    let gap = (sum.partial - rhs).abs();
    let top = *zeros.ordinates.last().expect("non-empty");
    let truncation_error = zero_sum_tail_estimate(2, top);
    Ok(ZeroIdentityReport {
        partial: sum.partial,
        used: sum.used,
        log_deriv2,
        rhs,
        gap,
        truncation_error,
        pass: gap <= truncation_error,
    })
}
