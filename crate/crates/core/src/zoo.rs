//! Builders for the alternating and symmetric Hilbert-type matrix families.
//!
//! Indices `m, n` run over `1..=N` in the formulas below.
//!
//! | kind               | entry                                   | structure       |
//! |--------------------|-----------------------------------------|-----------------|
//! | `Alternating`      | `1/(m-n)`, zero diagonal                | skew, Toeplitz  |
//! | `AlternatingQuant` | `sin(pi/N) / sin(pi(m-n)/N)`            | skew, Toeplitz  |
//! | `OscCos`           | `cos((m-n)theta)/(m-n)`, zero diagonal  | skew, Toeplitz  |
//! | `OscSin`           | `sin((m-n)theta)/(m-n)`, `theta` on diagonal | symmetric, Toeplitz |
//! | `SymmetricHilbert` | `1/(m+n-1)`                             | symmetric, Hankel |
//! | `SymmetricQuant`   | `sin(pi/N) / sin(pi(m+n-1)/N)`          | symmetric, Hankel |
//! | `CQuant`           | `1 / sin(pi(m+n-1)/N)`                  | symmetric, Hankel |
//! | `PrimeScaled`      | `1/((m-n) log p)`                       | skew, Toeplitz  |
//!
//! For the two sine-denominator Hankel families the entries where
//! `m+n-1 ≡ 0 (mod N)` (the anti-diagonal) are set to zero.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;
use crate::trig::sin_pi_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Alternating,
    AlternatingQuant,
    OscCos,
    OscSin,
    SymmetricHilbert,
    SymmetricQuant,
    CQuant,
    PrimeScaled,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Alternating,
        FamilyKind::AlternatingQuant,
        FamilyKind::OscCos,
        FamilyKind::OscSin,
        FamilyKind::SymmetricHilbert,
        FamilyKind::SymmetricQuant,
        FamilyKind::CQuant,
        FamilyKind::PrimeScaled,
    ];

    /// Short name used on the command line and in output files.
    pub fn slug(self) -> &'static str {
        match self {
            FamilyKind::Alternating => "alt",
            FamilyKind::AlternatingQuant => "alt-quant",
            FamilyKind::OscCos => "osc-cos",
            FamilyKind::OscSin => "osc-sin",
            FamilyKind::SymmetricHilbert => "sym-hilbert",
            FamilyKind::SymmetricQuant => "sym-quant",
            FamilyKind::CQuant => "c-quant",
            FamilyKind::PrimeScaled => "prime-scaled",
        }
    }

    pub fn is_skew(self) -> bool {
        matches!(
            self,
            FamilyKind::Alternating | FamilyKind::AlternatingQuant | FamilyKind::OscCos | FamilyKind::PrimeScaled
        )
    }

    pub fn is_toeplitz(self) -> bool {
        !self.is_hankel()
    }

    pub fn is_hankel(self) -> bool {
        matches!(self, FamilyKind::SymmetricHilbert | FamilyKind::SymmetricQuant | FamilyKind::CQuant)
    }

    pub fn uses_theta(self) -> bool {
        matches!(self, FamilyKind::OscCos | FamilyKind::OscSin)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.slug() == s)
            .ok_or_else(|| Error::invalid(format!("unknown family `{s}`")))
    }
}

/// Family kind plus the parameters that select one matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixFamily<T> {
    pub kind: FamilyKind,
    pub n: usize,
    /// Present iff `kind` is `OscCos` or `OscSin`; `0 <= theta <= pi/2`.
    pub theta: Option<T>,
    /// Present iff `kind` is `PrimeScaled`.
    pub p: Option<u64>,
}

impl<T: Real> MatrixFamily<T> {
    /// A family without parameters; use the dedicated constructors for the rest.
    pub fn plain(kind: FamilyKind, n: usize) -> Self {
        Self { kind, n, theta: None, p: None }
    }

    pub fn alternating(n: usize) -> Self {
        Self::plain(FamilyKind::Alternating, n)
    }

    pub fn alternating_quant(n: usize) -> Self {
        Self::plain(FamilyKind::AlternatingQuant, n)
    }

    pub fn osc_cos(n: usize, theta: T) -> Self {
        Self { kind: FamilyKind::OscCos, n, theta: Some(theta), p: None }
    }

    pub fn osc_sin(n: usize, theta: T) -> Self {
        Self { kind: FamilyKind::OscSin, n, theta: Some(theta), p: None }
    }

    pub fn symmetric_hilbert(n: usize) -> Self {
        Self::plain(FamilyKind::SymmetricHilbert, n)
    }

    pub fn symmetric_quant(n: usize) -> Self {
        Self::plain(FamilyKind::SymmetricQuant, n)
    }

    pub fn c_quant(n: usize) -> Self {
        Self::plain(FamilyKind::CQuant, n)
    }

    pub fn prime_scaled(n: usize, p: u64) -> Self {
        Self { kind: FamilyKind::PrimeScaled, n, theta: None, p: Some(p) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::invalid("n must be at least 1"));
        }
        match (self.kind.uses_theta(), self.theta) {
            (true, None) => return Err(Error::invalid(format!("{} requires theta", self.kind))),
            (false, Some(_)) => return Err(Error::invalid(format!("{} takes no theta", self.kind))),
            (true, Some(t)) => {
                if !(t >= T::zero() && t <= T::FRAC_PI_2()) {
                    return Err(Error::invalid(format!("theta = {t} outside [0, pi/2]")));
                }
            }
            (false, None) => {}
        }
        match (self.kind == FamilyKind::PrimeScaled, self.p) {
            (true, None) => return Err(Error::invalid("prime-scaled requires p")),
            (false, Some(_)) => return Err(Error::invalid(format!("{} takes no p", self.kind))),
            (true, Some(p)) if !is_prime(p) => return Err(Error::invalid(format!("p = {p} is not prime"))),
            _ => {}
        }
        Ok(())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn build<T: Real>(family: &MatrixFamily<T>) -> Result<Matrix<T>> {
    family.validate()?;
    let n = family.n;
    let big_n = n as u64;
    let m = match family.kind {
        FamilyKind::Alternating => toeplitz_skew(n, |d| T::one() / T::count(d)),
        FamilyKind::AlternatingQuant => {
            let s1 = sin_pi_ratio::<T>(1, big_n);
            toeplitz_skew(n, |d| s1 / sin_pi_ratio::<T>(d as i64, big_n))
        }
        FamilyKind::OscCos => {
            let theta = family.theta.expect("validated");
            toeplitz_skew(n, |d| (T::count(d) * theta).cos() / T::count(d))
        }
        FamilyKind::OscSin => {
            let theta = family.theta.expect("validated");
            toeplitz_symmetric(n, |d| if d == 0 { theta } else { (T::count(d) * theta).sin() / T::count(d) })
        }
        FamilyKind::SymmetricHilbert => hankel(n, |k| T::one() / T::count(k)),
        FamilyKind::SymmetricQuant => {
            let s1 = sin_pi_ratio::<T>(1, big_n);
            hankel(n, |k| if k % n == 0 { T::zero() } else { s1 / sin_pi_ratio::<T>(k as i64, big_n) })
        }
        FamilyKind::CQuant => {
            hankel(n, |k| if k % n == 0 { T::zero() } else { T::one() / sin_pi_ratio::<T>(k as i64, big_n) })
        }
        FamilyKind::PrimeScaled => {
            let log_p = T::count(family.p.expect("validated") as usize).ln();
            toeplitz_skew(n, |d| T::one() / T::count(d) / log_p)
        }
    };
    Ok(m)
}

/// `a[m][n] = c(m-n)` for `m > n`, `-c(n-m)` above, zero diagonal.
fn toeplitz_skew<T: Real>(n: usize, c: impl Fn(usize) -> T) -> Matrix<T> {
    let lower: Vec<Complex<T>> = (0..n).map(|d| cplx(if d == 0 { T::zero() } else { c(d) })).collect();
    let upper: Vec<Complex<T>> = lower.iter().map(|z| -z).collect();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        data.extend(lower[1..=i].iter().rev());
        data.push(lower[0]);
        data.extend_from_slice(&upper[1..n - i]);
    }
    Matrix::from_data(n, data)
}

fn toeplitz_symmetric<T: Real>(n: usize, c: impl Fn(usize) -> T) -> Matrix<T> {
    let coeffs: Vec<Complex<T>> = (0..n).map(|d| cplx(c(d))).collect();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        data.extend(coeffs[1..=i].iter().rev());
        data.extend_from_slice(&coeffs[..n - i]);
    }
    Matrix::from_data(n, data)
}

/// `a[m][n] = h(m+n-1)` with 1-based `m, n`.
fn hankel<T: Real>(n: usize, h: impl Fn(usize) -> T) -> Matrix<T> {
    let coeffs: Vec<Complex<T>> = (0..2 * n).map(|k| cplx(if k == 0 { T::zero() } else { h(k) })).collect();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        data.extend_from_slice(&coeffs[i + 1..i + 1 + n]);
    }
    Matrix::from_data(n, data)
}

fn cplx<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// Which structural properties a matrix was confirmed to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub skew: bool,
    pub symmetric: bool,
    pub toeplitz: bool,
    pub hankel: bool,
}

/// Checks the exact structure the family prescribes: skew or symmetric, and
/// Toeplitz or Hankel. Comparisons are exact (the builders compute one value
/// per diagonal and negate it for the mirror entry).
pub fn validate_structure<T: Real>(m: &Matrix<T>, family: &MatrixFamily<T>) -> Result<StructureReport> {
    family.validate()?;
    let n = m.dim();
    if n != family.n {
        return Err(Error::DimensionMismatch { left: n, right: family.n });
    }
    let skew = family.kind.is_skew();
    for i in 0..n {
        for j in 0..n {
            let a = m[(i, j)];
            if a.im != T::zero() {
                return Err(violation(i, j, "real entries"));
            }
            let mirror = m[(j, i)];
            let ok = if skew { a == -mirror } else { a == mirror };
            if !ok {
                return Err(violation(i.min(j), i.max(j), if skew { "skew-symmetry" } else { "symmetry" }));
            }
        }
    }
    let hankel = family.kind.is_hankel();
    for i in 0..n.saturating_sub(1) {
        for j in 0..n.saturating_sub(1) {
            if hankel {
                if m[(i, j + 1)] != m[(i + 1, j)] {
                    return Err(violation(i, j + 1, "Hankel structure"));
                }
            } else if m[(i, j)] != m[(i + 1, j + 1)] {
                return Err(violation(i, j, "Toeplitz structure"));
            }
        }
    }
    Ok(StructureReport { skew, symmetric: !skew, toeplitz: !hankel, hankel })
}

fn violation(i: usize, j: usize, property: &'static str) -> Error {
    Error::StructureViolation { row: i + 1, col: j + 1, property }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;
    use std::f64::consts::FRAC_PI_2;

    fn real(m: &Matrix<f64>) -> Vec<f64> {
        m.real_parts()
    }

    #[test]
    fn alternating_two() {
        let m = build(&MatrixFamily::<f64>::alternating(2)).unwrap();
        assert_eq!(real(&m), vec![0.0, -1.0, 1.0, 0.0]);
    }

    #[test]
    fn alternating_quant_two() {
        let m = build(&MatrixFamily::<f64>::alternating_quant(2)).unwrap();
        assert_eq!(real(&m), vec![0.0, -1.0, 1.0, 0.0]);
    }

    #[test]
    fn osc_cos_at_zero_is_alternating() {
        let a = build(&MatrixFamily::osc_cos(2, 0.0)).unwrap();
        assert_eq!(a, build(&MatrixFamily::alternating(2)).unwrap());
    }

    #[test]
    fn symmetric_quant_two() {
        let m = build(&MatrixFamily::<f64>::symmetric_quant(2)).unwrap();
        assert_eq!(real(&m), vec![1.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn quant_hankel_single_entry_is_zeroed() {
        assert_eq!(real(&build(&MatrixFamily::<f64>::symmetric_quant(1)).unwrap()), vec![0.0]);
        assert_eq!(real(&build(&MatrixFamily::<f64>::c_quant(1)).unwrap()), vec![0.0]);
    }

    #[test]
    fn osc_sin_diagonal_and_zero_theta() {
        let b = build(&MatrixFamily::osc_sin(4, 0.7)).unwrap();
        for i in 0..4 {
            assert_eq!(b[(i, i)].re, 0.7);
        }
        let z = build(&MatrixFamily::osc_sin(4, 0.0)).unwrap();
        assert_eq!(z.max_abs(), 0.0);
    }

    #[test]
    fn parameter_errors() {
        assert!(build(&MatrixFamily::osc_cos(3, FRAC_PI_2 + 1e-9)).is_err());
        assert!(build(&MatrixFamily::osc_sin(3, -0.1)).is_err());
        assert!(build(&MatrixFamily::<f64>::prime_scaled(3, 4)).is_err());
        assert!(build(&MatrixFamily::<f64>::alternating(0)).is_err());
        assert!(build(&MatrixFamily::osc_cos(3, FRAC_PI_2)).is_ok());
        let mut f = MatrixFamily::<f64>::alternating(3);
        f.theta = Some(0.1);
        assert!(build(&f).is_err());
    }

    #[test]
    fn validation_passes_for_every_family() {
        for kind in FamilyKind::ALL {
            let mut f = MatrixFamily::<f64>::plain(kind, 7);
            if kind.uses_theta() {
                f.theta = Some(0.4);
            }
            if kind == FamilyKind::PrimeScaled {
                f.p = Some(5);
            }
            let m = build(&f).unwrap();
            let r = validate_structure(&m, &f).unwrap();
            assert_eq!(r.skew, kind.is_skew(), "{kind}");
            assert_eq!(r.hankel, kind.is_hankel(), "{kind}");
        }
    }

    #[test]
    fn corrupted_entry_is_located() {
        let f = MatrixFamily::<f64>::alternating(5);
        let mut m = build(&f).unwrap();
        m[(0, 1)] = Complex::new(0.25, 0.0);
        assert_eq!(
            validate_structure(&m, &f),
            Err(Error::StructureViolation { row: 1, col: 2, property: "skew-symmetry" })
        );
    }

    #[test]
    fn family_slugs_round_trip() {
        for kind in FamilyKind::ALL {
            assert_eq!(kind.slug().parse::<FamilyKind>().unwrap(), kind);
        }
        assert!("hilbert".parse::<FamilyKind>().is_err());
    }
}
