//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    /// Column `j` is the eigenvector for `values[j]`.
    pub vectors: Matrix<T>,
    /// `max_j ||H v_j - lambda_j v_j||_2 / ||H||_F`.
    pub residual: T,
    /// Jacobi sweeps, or implicit QL iterations for the tridiagonal path.
    pub sweeps_used: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct JacobiConfig<T> {
    /// Bound on the returned residual; also scales the Hermitian check.
    pub tol: T,
    /// Sweeps stop once `off(H) <= off_tol * ||H||_F`.
    pub off_tol: T,
    pub max_sweeps: usize,
}

impl<T: Real> JacobiConfig<T> {
    pub fn new(tol: T) -> Self {
        Self { tol, off_tol: T::JACOBI_OFF_TOL, max_sweeps: 60 }
    }
}

impl<T: Real> Default for JacobiConfig<T> {
    fn default() -> Self {
        Self::new(T::DEFAULT_TOL)
    }
}

pub fn hermitian_eigen<T: Real>(h: &Matrix<T>, tol: T) -> Result<EigenDecomposition<T>> {
    hermitian_eigen_with(h, &JacobiConfig::new(tol))
}

pub fn hermitian_eigen_with<T: Real>(
    h: &Matrix<T>,
    config: &JacobiConfig<T>,
) -> Result<EigenDecomposition<T>> {
    check_finite(h)?;
    let norm = h.frobenius();
    let (dev, row, col) = h.hermitian_deviation();
    if dev > config.tol * norm {
        return Err(Error::NotHermitian { row, col, deviation: dev.to_f64_lossy() });
    }

    let n = h.dim();
    let mut a: Vec<Complex<T>> = h.as_slice().to_vec();
    // Symmetrize so rounding in the input cannot leak into the rotations.
    for i in 0..n {
        a[i * n + i] = Complex::new(a[i * n + i].re, T::zero());
        for j in i + 1..n {
            let avg = (a[i * n + j] + a[j * n + i].conj()).unscale(T::lit(2.0));
            a[i * n + j] = avg;
            a[j * n + i] = avg.conj();
        }
    }
    // Rows of `vt` are the eigenvectors being accumulated.
    let mut vt = vec![Complex::<T>::zero(); n * n];
    for i in 0..n {
        vt[i * n + i] = Complex::one();
    }

    let target = config.off_tol * norm;
    let mut sweeps = 0;
    while off_norm(&a, n) > target {
        if sweeps == config.max_sweeps {
            let values: Vec<T> = (0..n).map(|i| a[i * n + i].re).collect();
            let residual = residual_of(h, norm, &values, &vt);
            return Err(Error::NoConvergence { sweeps, residual: residual.to_f64_lossy() });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut vt, n, p, q);
            }
        }
    }

    let raw: Vec<T> = (0..n).map(|i| a[i * n + i].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| raw[x].partial_cmp(&raw[y]).expect("finite eigenvalues"));
    let values: Vec<T> = order.iter().map(|&k| raw[k]).collect();
    let mut sorted_vt = Vec::with_capacity(n * n);
    for &k in &order {
        sorted_vt.extend_from_slice(&vt[k * n..(k + 1) * n]);
    }

    let residual = residual_of(h, norm, &values, &sorted_vt);
    if residual > config.tol {
        return Err(Error::NoConvergence { sweeps, residual: residual.to_f64_lossy() });
    }
    let vectors = Matrix::from_fn(n, |i, j| sorted_vt[j * n + i]);
    Ok(EigenDecomposition { values, vectors, residual, sweeps_used: sweeps })
}

fn check_finite<T: Real>(h: &Matrix<T>) -> Result<()> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    Ok(())
}

fn off_norm<T: Real>(a: &[Complex<T>], n: usize) -> T {
    let mut s = T::zero();
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j].norm_sqr();
        }
    }
    (s + s).sqrt()
}

/// One two-sided rotation `H <- J* H J` annihilating `H[p,q]`, with `V <- V J`.
fn rotate<T: Real>(a: &mut [Complex<T>], vt: &mut [Complex<T>], n: usize, p: usize, q: usize) {
    let hpq = a[p * n + q];
    let r = hpq.norm();
    if r == T::zero() {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    // Already negligible relative to both diagonal entries.
    if r <= T::EPS * T::EPS * (app.abs() + aqq.abs()) {
        a[p * n + q] = Complex::zero();
        a[q * n + p] = Complex::zero();
        return;
    }
    // w = e^{-i arg h_pq}
    let w = hpq.conj().unscale(r);
    let zeta = (aqq - app) / (r + r);
    let t = {
        let t = T::one() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
        if zeta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    let sw = w.scale(s);
    let cw = w.scale(c);
    let sw_c = sw.conj();
    let cw_c = cw.conj();

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let hp = a[p * n + k];
        let hq = a[q * n + k];
        let np = hp.scale(c) - sw_c * hq;
        let nq = hp.scale(s) + cw_c * hq;
        a[p * n + k] = np;
        a[q * n + k] = nq;
        a[k * n + p] = np.conj();
        a[k * n + q] = nq.conj();
    }
    a[p * n + p] = Complex::new(app - t * r, T::zero());
    a[q * n + q] = Complex::new(aqq + t * r, T::zero());
    a[p * n + q] = Complex::zero();
    a[q * n + p] = Complex::zero();

    // Columns p, q of V are rows p, q of vt.
    for k in 0..n {
        let vp = vt[p * n + k];
        let vq = vt[q * n + k];
        vt[p * n + k] = vp.scale(c) - sw * vq;
        vt[q * n + k] = vp.scale(s) + cw * vq;
    }
}

/// Relative residual for eigenvectors stored as rows of `vt`.
pub(crate) fn residual_of<T: Real>(h: &Matrix<T>, norm: T, values: &[T], vt: &[Complex<T>]) -> T {
    let n = h.dim();
    if norm == T::zero() {
        return T::zero();
    }
    let mut worst = T::zero();
    for (j, &lambda) in values.iter().enumerate() {
        let v = &vt[j * n..(j + 1) * n];
        let mut r2 = T::zero();
        for i in 0..n {
            let row = h.row(i);
            let mut acc = Complex::<T>::zero();
            for (hik, vk) in row.iter().zip(v) {
                acc += hik * vk;
            }
            r2 += (acc - v[i].scale(lambda)).norm_sqr();
        }
        worst = worst.max(r2.sqrt());
    }
    worst / norm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn scalar_case() {
        let h = Matrix::from_real_rows(&[vec![5.0]]).unwrap();
        let e = hermitian_eigen(&h, 1e-12).unwrap();
        assert_eq!(e.values, vec![5.0]);
        assert_eq!(e.residual, 0.0);
    }

    #[test]
    fn diagonal_input_sorted() {
        let h = Matrix::from_real_rows(&[vec![3.0, 0.0], vec![0.0, -1.0]]).unwrap();
        let e = hermitian_eigen(&h, 1e-12).unwrap();
        assert_eq!(e.values, vec![-1.0, 3.0]);
        assert_eq!(e.sweeps_used, 0);
    }

    #[test]
    fn i_times_rotation_generator() {
        // i * [[0, -1], [1, 0]] = [[0, -i], [i, 0]]; lambda^2 - 1 = 0.
        let h = Matrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]])
            .unwrap();
        let e = hermitian_eigen(&h, 1e-12).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15);
        assert!((e.values[1] - 1.0).abs() < 1e-15);
        assert!(e.residual < 1e-15);
    }

    #[test]
    fn complex_three_by_three() {
        let h = Matrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -2.0)],
            vec![c(1.0, -1.0), c(-1.0, 0.0), c(0.5, 0.25)],
            vec![c(0.0, 2.0), c(0.5, -0.25), c(4.0, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigen(&h, 1e-12).unwrap();
        let sum: f64 = e.values.iter().sum();
        assert!((sum - 5.0).abs() < 1e-12);
        assert!(e.residual < 1e-14);
        let vhv = e.vectors.conj_transpose().matmul(&e.vectors).unwrap();
        let gap = vhv.sub(&Matrix::identity(3)).unwrap().max_abs();
        assert!(gap < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let h = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(hermitian_eigen(&h, 1e-12), Err(Error::NotHermitian { row: 0, col: 1, .. })));
    }

    #[test]
    fn sweep_cap_reports_no_convergence() {
        let h = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        let config = JacobiConfig { tol: 1e-12, off_tol: 1e-12, max_sweeps: 0 };
        assert!(matches!(hermitian_eigen_with(&h, &config), Err(Error::NoConvergence { sweeps: 0, .. })));
    }

    #[test]
    fn ties_keep_original_order() {
        let h = Matrix::<f64>::identity(3);
        let e = hermitian_eigen(&h, 1e-12).unwrap();
        assert_eq!(e.vectors, Matrix::identity(3));
    }

    #[test]
    fn works_in_single_precision() {
        let h = Matrix::from_real_rows(&[vec![2.0f32, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = hermitian_eigen(&h, 1e-5).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-6);
        assert!((e.values[1] - 3.0).abs() < 1e-6);
    }
}
