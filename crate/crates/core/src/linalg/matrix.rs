use std::ops::{Index, IndexMut};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

/// `log|det|` together with the unit phase of the determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogDet<T> {
    /// `det / |det|`, or zero for a singular matrix.
    pub phase: Complex<T>,
    pub log_abs: T,
}

impl<T: Real> LogDet<T> {
    /// Sign of a real determinant: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        if self.phase.is_zero() {
            0
        } else if self.phase.re < T::zero() {
            -1
        } else {
            1
        }
    }
}

impl<T: Real> Matrix<T> {
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        Self { n, data: vec![Complex::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    /// Builds a matrix from a closure over 0-based `(row, col)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Wraps row-major storage of length `n * n`.
    pub(crate) fn from_data(n: usize, data: Vec<Complex<T>>) -> Self {
        assert!(n >= 1 && data.len() == n * n);
        Self { n, data }
    }

    pub fn from_real_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self::from_fn(n, |i, j| Complex::new(f(i, j), T::zero()))
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Rows must all have length equal to the number of rows; entries must be finite.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            for (j, z) in row.iter().enumerate() {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                data.push(*z);
            }
        }
        Ok(Self { n, data })
    }

    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        let rows: Vec<Vec<Complex<T>>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex::new(x, T::zero())).collect())
            .collect();
        Self::from_rows(&rows)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn frobenius(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.n).map(|i| self[(i, i)]).fold(Complex::zero(), |a, b| a + b)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Largest `|im|` over all entries.
    pub fn max_imag(&self) -> T {
        self.data.iter().map(|z| z.im.abs()).fold(T::zero(), T::max)
    }

    pub fn real_parts(&self) -> Vec<T> {
        self.data.iter().map(|z| z.re).collect()
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let b_row = &other.data[k * n..(k + 1) * n];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { n: self.n, data })
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self { n: self.n, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_real(&self, s: T) -> Self {
        Self { n: self.n, data: self.data.iter().map(|z| z.scale(s)).collect() }
    }

    /// `i * A`; Hermitian whenever `A` is skew-Hermitian.
    pub fn times_i(&self) -> Self {
        self.scale(Complex::i())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// `max |H_ij - conj(H_ji)|` with the 0-based location of the worst pair.
    pub fn hermitian_deviation(&self) -> (T, usize, usize) {
        self.pair_deviation(|a, b| a - b.conj())
    }

    /// `max |A_ij + A_ji|` with the 0-based location of the worst pair.
    pub fn skew_deviation(&self) -> (T, usize, usize) {
        self.pair_deviation(|a, b| a + b)
    }

    fn pair_deviation(&self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> (T, usize, usize) {
        let mut worst = (T::zero(), 0, 0);
        for i in 0..self.n {
            for j in i..self.n {
                let d = f(self[(i, j)], self[(j, i)]).norm();
                if d > worst.0 {
                    worst = (d, i, j);
                }
            }
        }
        worst
    }

    /// Determinant in log-magnitude form, by Gaussian elimination with partial pivoting.
    pub fn log_abs_det(&self) -> LogDet<T> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut phase = Complex::<T>::one();
        let mut log_abs = T::zero();
        for col in 0..n {
            let (pivot_row, pivot_abs) = (col..n)
                .map(|r| (r, a[r * n + col].norm()))
                .fold((col, T::neg_infinity()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_abs == T::zero() {
                return LogDet { phase: Complex::zero(), log_abs: T::neg_infinity() };
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                phase = -phase;
            }
            let pivot = a[col * n + col];
            phase *= pivot.unscale(pivot_abs);
            log_abs += pivot_abs.ln();
            for r in col + 1..n {
                let factor = a[r * n + col] / pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col + 1..n {
                    let upper = a[col * n + j];
                    a[r * n + j] -= factor * upper;
                }
            }
        }
        // Renormalize the accumulated phase against rounding drift.
        let p = phase.norm();
        LogDet { phase: phase.unscale(p), log_abs }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n + j]
    }
}
