//! Spectral front-ends for real symmetric and real skew-symmetric matrices.

use num_complex::Complex;
use num_traits::Zero;

use super::jacobi::EigenDecomposition;
use super::matrix::Matrix;
use super::tridiag::{ascending_order, ql_implicit, reduce, skew_phases, Symmetry};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    HermitianReal,
    SkewImaginary,
}

impl SpectrumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::HermitianReal => "hermitian-real",
            SpectrumKind::SkewImaginary => "skew-imaginary",
        }
    }
}

/// Eigenvalue multiset with pairing metadata.
#[derive(Debug, Clone)]
pub struct SpectrumSet<T> {
    /// Ascending by real part (hermitian) or imaginary part (skew).
    pub eigenvalues: Vec<Complex<T>>,
    pub kind: SpectrumKind,
    pub zero_count: usize,
    /// Skew kind: the `mu_k > 0` with eigenvalues `+-i mu_k`, ascending. Empty otherwise.
    pub positive_branch: Vec<T>,
    /// `None` when the spectrum was computed without eigenvectors.
    pub residual: Option<T>,
}

impl<T: Real> SpectrumSet<T> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest eigenvalue modulus.
    pub fn radius(&self) -> T {
        self.eigenvalues.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Signed imaginary parts (skew) or real parts (hermitian), ascending.
    pub fn signed_values(&self) -> Vec<T> {
        match self.kind {
            SpectrumKind::SkewImaginary => self.eigenvalues.iter().map(|z| z.im).collect(),
            SpectrumKind::HermitianReal => self.eigenvalues.iter().map(|z| z.re).collect(),
        }
    }

    pub fn from_hermitian(values: &[T], residual: Option<T>) -> Self {
        Self {
            eigenvalues: values.iter().map(|&v| Complex::new(v, T::zero())).collect(),
            kind: SpectrumKind::HermitianReal,
            zero_count: values.iter().filter(|v| v.is_zero()).count(),
            positive_branch: Vec::new(),
            residual,
        }
    }
}

/// `|mu| <= n * 1e-11 * ||A||_F` is declared an exact zero.
pub fn zero_snap_threshold<T: Real>(n: usize, frobenius: T) -> T {
    let rel = T::lit(1e-11).max(T::lit(100.0) * T::EPS);
    T::count(n) * rel * frobenius
}

fn check_finite<T: Real>(a: &Matrix<T>) -> Result<()> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    Ok(())
}

fn check_skew<T: Real>(a: &Matrix<T>, tol: T) -> Result<()> {
    check_finite(a)?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let im = a[(i, j)].im.abs();
            if im > tol {
                return Err(Error::NotSkew { row: i, col: j, deviation: im.to_f64_lossy() });
            }
        }
    }
    let (dev, row, col) = a.skew_deviation();
    if dev > tol * a.frobenius() {
        return Err(Error::NotSkew { row, col, deviation: dev.to_f64_lossy() });
    }
    Ok(())
}

fn check_symmetric<T: Real>(a: &Matrix<T>, tol: T) -> Result<()> {
    check_finite(a)?;
    let norm = a.frobenius();
    let (dev, row, col) = a.hermitian_deviation();
    if dev > tol * norm || a.max_imag() > tol * norm {
        return Err(Error::NotHermitian { row, col, deviation: dev.to_f64_lossy() });
    }
    Ok(())
}

fn real_symmetrized<T: Real>(a: &Matrix<T>, sign: T) -> Vec<T> {
    let n = a.dim();
    let mut out = vec![T::zero(); n * n];
    let half = T::lit(0.5);
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = half * (a[(i, j)].re + sign * a[(j, i)].re);
        }
    }
    out
}

/// Eigen-decomposition of a real symmetric matrix by Householder
/// tridiagonalization and implicit QL.
pub fn symmetric_eigen<T: Real>(a: &Matrix<T>, tol: T) -> Result<EigenDecomposition<T>> {
    check_symmetric(a, tol)?;
    let n = a.dim();
    let sym = real_symmetrized(a, T::one());
    let red = reduce(sym.clone(), n, Symmetry::Symmetric, true);
    let mut tri = red.tri;
    let mut basis = red.basis.expect("basis requested");
    let iterations = ql_implicit(&mut tri, Some((&mut basis, n)))?;
    let order = ascending_order(&tri.diag);
    let values: Vec<T> = order.iter().map(|&k| tri.diag[k]).collect();

    let norm = a.frobenius();
    let residual = real_residual(&sym, n, norm, &values, &order, &basis);
    if residual > tol {
        return Err(Error::NoConvergence { sweeps: iterations, residual: residual.to_f64_lossy() });
    }
    let vectors = Matrix::from_fn(n, |i, j| Complex::new(basis[order[j] * n + i], T::zero()));
    Ok(EigenDecomposition { values, vectors, residual, sweeps_used: iterations })
}

/// Eigenvalues only, ascending.
pub fn symmetric_eigenvalues<T: Real>(a: &Matrix<T>, tol: T) -> Result<Vec<T>> {
    check_symmetric(a, tol)?;
    let n = a.dim();
    let red = reduce(real_symmetrized(a, T::one()), n, Symmetry::Symmetric, false);
    let mut tri = red.tri;
    ql_implicit(&mut tri, None)?;
    let order = ascending_order(&tri.diag);
    Ok(order.iter().map(|&k| tri.diag[k]).collect())
}

fn real_residual<T: Real>(a: &[T], n: usize, norm: T, values: &[T], order: &[usize], rows: &[T]) -> T {
    if norm == T::zero() {
        return T::zero();
    }
    let mut worst = T::zero();
    for (&k, &lambda) in order.iter().zip(values) {
        let v = &rows[k * n..(k + 1) * n];
        let mut r2 = T::zero();
        for i in 0..n {
            let acc: T = a[i * n..(i + 1) * n].iter().zip(v).map(|(x, y)| *x * *y).sum();
            let d = acc - lambda * v[i];
            r2 += d * d;
        }
        worst = worst.max(r2.sqrt());
    }
    worst / norm
}

/// Spectrum of a real skew-symmetric matrix, obtained by diagonalizing the
/// Hermitian matrix `i*A`. Eigenvectors are formed to certify the residual.
pub fn skew_spectrum<T: Real>(a: &Matrix<T>, tol: T) -> Result<SpectrumSet<T>> {
    skew_spectrum_impl(a, tol, true)
}

/// As [`skew_spectrum`], without eigenvectors; `residual` is `None`.
pub fn skew_spectrum_values<T: Real>(a: &Matrix<T>, tol: T) -> Result<SpectrumSet<T>> {
    skew_spectrum_impl(a, tol, false)
}

fn skew_spectrum_impl<T: Real>(a: &Matrix<T>, tol: T, with_vectors: bool) -> Result<SpectrumSet<T>> {
    check_skew(a, tol)?;
    let n = a.dim();
    let skew = real_symmetrized(a, -T::one());
    let red = reduce(skew.clone(), n, Symmetry::Skew, with_vectors);
    let mut tri = red.tri;
    let norm = a.frobenius();

    let (values, residual) = if with_vectors {
        // Row k holds re and im parts of column k of Q*Phi (width 2n).
        let basis = red.basis.expect("basis requested");
        let phases = skew_phases(&red.skew_sub);
        let mut rows = vec![T::zero(); 2 * n * n];
        for k in 0..n {
            let (re, im) = (phases[k].re, phases[k].im);
            for i in 0..n {
                let q = basis[k * n + i];
                rows[k * 2 * n + i] = re * q;
                rows[k * 2 * n + n + i] = im * q;
            }
        }
        let iterations = ql_implicit(&mut tri, Some((&mut rows, 2 * n)))?;
        let order = ascending_order(&tri.diag);
        let values: Vec<T> = order.iter().map(|&k| tri.diag[k]).collect();
        let residual = skew_residual(&skew, n, norm, &values, &order, &rows);
        if residual > tol {
            return Err(Error::NoConvergence { sweeps: iterations, residual: residual.to_f64_lossy() });
        }
        (values, Some(residual))
    } else {
        ql_implicit(&mut tri, None)?;
        let order = ascending_order(&tri.diag);
        (order.iter().map(|&k| tri.diag[k]).collect(), None)
    };

    Ok(pair_skew(&values, norm, residual))
}

/// `||i A v - lambda v|| / ||A||_F` with `v = vr + i vi`:
/// `i A v = -A vi + i A vr`.
fn skew_residual<T: Real>(a: &[T], n: usize, norm: T, values: &[T], order: &[usize], rows: &[T]) -> T {
    if norm == T::zero() {
        return T::zero();
    }
    let mut worst = T::zero();
    for (&k, &lambda) in order.iter().zip(values) {
        let vr = &rows[k * 2 * n..k * 2 * n + n];
        let vi = &rows[k * 2 * n + n..(k + 1) * 2 * n];
        let mut r2 = T::zero();
        for i in 0..n {
            let row = &a[i * n..(i + 1) * n];
            let avr: T = row.iter().zip(vr).map(|(x, y)| *x * *y).sum();
            let avi: T = row.iter().zip(vi).map(|(x, y)| *x * *y).sum();
            let re = -avi - lambda * vr[i];
            let im = avr - lambda * vi[i];
            r2 += re * re + im * im;
        }
        worst = worst.max(r2.sqrt());
    }
    worst / norm
}

/// Pairs the ascending real spectrum of `i*A` as `+-mu`, snapping small
/// pairs to zero, so the result is exactly closed under negation.
fn pair_skew<T: Real>(values: &[T], norm: T, residual: Option<T>) -> SpectrumSet<T> {
    let n = values.len();
    let threshold = zero_snap_threshold(n, norm);
    let mut positive = Vec::with_capacity(n / 2);
    for k in 0..n / 2 {
        let mu = (values[n - 1 - k] - values[k]) / T::lit(2.0);
        if mu > threshold {
            positive.push(mu);
        }
    }
    positive.reverse();
    let zero_count = n - 2 * positive.len();
    let mut eigenvalues = Vec::with_capacity(n);
    eigenvalues.extend(positive.iter().rev().map(|&mu| Complex::new(T::zero(), -mu)));
    eigenvalues.extend(std::iter::repeat_n(Complex::zero(), zero_count));
    eigenvalues.extend(positive.iter().map(|&mu| Complex::new(T::zero(), mu)));
    SpectrumSet { eigenvalues, kind: SpectrumKind::SkewImaginary, zero_count, positive_branch: positive, residual }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_rotation_generator() {
        let a = Matrix::<f64>::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        let s = skew_spectrum(&a, 1e-12).unwrap();
        assert_eq!(s.zero_count, 0);
        assert_eq!(s.positive_branch.len(), 1);
        assert!((s.positive_branch[0] - 1.0).abs() < 1e-15);
        assert_eq!(s.eigenvalues[0], Complex::new(0.0, -s.positive_branch[0]));
        assert!(s.residual.unwrap() < 1e-15);
    }

    #[test]
    fn one_by_one_zero() {
        let a = Matrix::from_real_rows(&[vec![0.0]]).unwrap();
        let s = skew_spectrum(&a, 1e-12).unwrap();
        assert_eq!(s.eigenvalues, vec![Complex::new(0.0, 0.0)]);
        assert_eq!(s.zero_count, 1);
        assert_eq!(s.residual, Some(0.0));
    }

    #[test]
    fn skew_three_by_three_has_kernel() {
        // [[0, a, b], [-a, 0, c], [-b, -c, 0]] has eigenvalues 0, +-i sqrt(a^2+b^2+c^2)
        let a = Matrix::<f64>::from_real_rows(&[vec![0.0, 1.0, 2.0], vec![-1.0, 0.0, 2.0], vec![-2.0, -2.0, 0.0]])
            .unwrap();
        let s = skew_spectrum(&a, 1e-12).unwrap();
        assert_eq!(s.zero_count, 1);
        assert!((s.positive_branch[0] - 3.0).abs() < 1e-14);
        let v = skew_spectrum_values(&a, 1e-12).unwrap();
        assert_eq!(v.residual, None);
        assert!((v.positive_branch[0] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_symmetric_input() {
        let a = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(skew_spectrum(&a, 1e-12), Err(Error::NotSkew { .. })));
    }

    #[test]
    fn rejects_complex_input() {
        let mut a = Matrix::<f64>::zeros(2);
        a[(0, 1)] = Complex::new(0.0, 1.0);
        a[(1, 0)] = Complex::new(0.0, 1.0);
        assert!(matches!(skew_spectrum(&a, 1e-12), Err(Error::NotSkew { .. })));
    }

    #[test]
    fn symmetric_path_matches_closed_form() {
        // tridiagonal Toeplitz 2, -1: eigenvalues 2 - 2 cos(k pi / (n+1))
        let n = 12;
        let a = Matrix::from_real_fn(n, |i, j| match i.abs_diff(j) {
            0 => 2.0,
            1 => -1.0,
            _ => 0.0,
        });
        let e = symmetric_eigen(&a, 1e-12).unwrap();
        for (k, v) in e.values.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13, "{k}: {v} vs {exact}");
        }
        let only = symmetric_eigenvalues(&a, 1e-12).unwrap();
        assert_eq!(only.len(), n);
        let vtv = e.vectors.conj_transpose().matmul(&e.vectors).unwrap();
        assert!(vtv.sub(&Matrix::identity(n)).unwrap().max_abs() < 1e-13);
    }
}
