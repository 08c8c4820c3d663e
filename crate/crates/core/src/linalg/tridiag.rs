//! Householder reduction to tridiagonal form and implicit QL iteration.
//!
//! Real symmetric input reduces to a symmetric tridiagonal directly. Real
//! skew-symmetric input reduces to a skew tridiagonal `T`; `i*T` is then
//! carried to a real symmetric tridiagonal with zero diagonal by a diagonal
//! unitary of powers of `i`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric tridiagonal: `diag[k]`, coupling `off[k]` between `k` and `k+1`.
#[derive(Debug, Clone)]
pub(crate) struct Tridiagonal<T> {
    pub diag: Vec<T>,
    pub off: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Symmetry {
    Symmetric,
    Skew,
}

/// Result of the reduction. `basis` holds, row by row, the columns of the
/// orthogonal factor `Q` (so `A = Q T Q^T`), when requested.
pub(crate) struct Reduction<T> {
    pub tri: Tridiagonal<T>,
    /// For skew input: the raw subdiagonal of the skew tridiagonal.
    pub skew_sub: Vec<T>,
    pub basis: Option<Vec<T>>,
}

/// Reduces a dense real `n x n` matrix (row-major) that is symmetric or skew.
pub(crate) fn reduce<T: Real>(mut a: Vec<T>, n: usize, symmetry: Symmetry, want_basis: bool) -> Reduction<T> {
    let mut sub = vec![T::zero(); n.saturating_sub(1)];
    let mut reflectors: Vec<(Vec<T>, T)> = Vec::with_capacity(n.saturating_sub(2));
    let mut v = vec![T::zero(); n];
    let mut q = vec![T::zero(); n];

    for k in 0..n.saturating_sub(1) {
        let m = n - k - 1;
        let x0 = a[(k + 1) * n + k];
        let tail: T = (k + 2..n).map(|r| a[r * n + k] * a[r * n + k]).sum();
        if tail == T::zero() {
            sub[k] = x0;
            if want_basis && m > 1 {
                reflectors.push((Vec::new(), T::zero()));
            }
            continue;
        }
        let sigma = (x0 * x0 + tail).sqrt();
        let alpha = if x0 >= T::zero() { -sigma } else { sigma };
        let beta = T::one() / (sigma * (sigma + x0.abs()));
        let v = &mut v[..m];
        v[0] = x0 - alpha;
        for r in 1..m {
            v[r] = a[(k + 1 + r) * n + k];
        }
        sub[k] = alpha;

        // q = beta * A22 v
        let q = &mut q[..m];
        for i in 0..m {
            let row = &a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + n];
            let mut acc = T::zero();
            for (x, y) in row.iter().zip(v.iter()) {
                acc += *x * *y;
            }
            q[i] = beta * acc;
        }
        match symmetry {
            Symmetry::Symmetric => {
                // w = q - (beta/2)(q.v) v ; A22 -= v w^T + w v^T
                let qv: T = q.iter().zip(v.iter()).map(|(x, y)| *x * *y).sum();
                let gamma = beta * qv / T::lit(2.0);
                for i in 0..m {
                    q[i] -= gamma * v[i];
                }
                for i in 0..m {
                    let (vi, wi) = (v[i], q[i]);
                    let row = &mut a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + n];
                    for j in 0..m {
                        row[j] -= vi * q[j] + wi * v[j];
                    }
                }
            }
            Symmetry::Skew => {
                // H A22 H = A22 + v q^T - q v^T  (v^T A22 v = 0)
                for i in 0..m {
                    let (vi, qi) = (v[i], q[i]);
                    let row = &mut a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + n];
                    for j in 0..m {
                        row[j] += vi * q[j] - qi * v[j];
                    }
                }
            }
        }
        if want_basis && m > 1 {
            reflectors.push((v.to_vec(), beta));
        }
    }

    let basis = want_basis.then(|| accumulate(n, &reflectors));

    let (tri, skew_sub) = match symmetry {
        Symmetry::Symmetric => {
            let diag = (0..n).map(|i| a[i * n + i]).collect();
            (Tridiagonal { diag, off: sub }, Vec::new())
        }
        Symmetry::Skew => {
            let off = sub.iter().map(|x| x.abs()).collect();
            (Tridiagonal { diag: vec![T::zero(); n], off }, sub)
        }
    };
    Reduction { tri, skew_sub, basis }
}

/// Builds `Q = H_0 H_1 ... H_{n-3}` and returns it transposed (rows are columns of Q).
fn accumulate<T: Real>(n: usize, reflectors: &[(Vec<T>, T)]) -> Vec<T> {
    let mut qm = vec![T::zero(); n * n];
    for i in 0..n {
        qm[i * n + i] = T::one();
    }
    let mut w = vec![T::zero(); n];
    for (k, (v, beta)) in reflectors.iter().enumerate().rev() {
        if v.is_empty() {
            continue;
        }
        let off = k + 1;
        let m = n - off;
        // Q[off.., off..] <- (I - beta v v^T) Q[off.., off..]
        let w = &mut w[..m];
        w.iter_mut().for_each(|x| *x = T::zero());
        for (r, vr) in v.iter().enumerate() {
            let row = &qm[(off + r) * n + off..(off + r) * n + n];
            for (wj, x) in w.iter_mut().zip(row) {
                *wj += *vr * *x;
            }
        }
        for (r, vr) in v.iter().enumerate() {
            let s = *beta * *vr;
            let row = &mut qm[(off + r) * n + off..(off + r) * n + n];
            for (x, wj) in row.iter_mut().zip(w.iter()) {
                *x -= s * *wj;
            }
        }
    }
    // transpose
    let mut qt = vec![T::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            qt[j * n + i] = qm[i * n + j];
        }
    }
    qt
}

/// Implicit QL with Wilkinson shifts. Eigenvalues land in `tri.diag`
/// (unsorted); each rotation of indices `i, i+1` is also applied to rows
/// `i, i+1` of `rows` (row length `width`). Returns the iteration count.
pub(crate) fn ql_implicit<T: Real>(
    tri: &mut Tridiagonal<T>,
    mut rows: Option<(&mut [T], usize)>,
) -> Result<usize> {
    let n = tri.diag.len();
    let d = &mut tri.diag;
    let mut e = tri.off.clone();
    e.push(T::zero());
    let scale = (0..n).map(|i| d[i].abs() + e[i].abs()).fold(T::zero(), T::max);
    if scale == T::zero() {
        return Ok(0);
    }
    let small = T::EPS * scale;
    let mut total = 0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                if e[m].abs() <= small {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            total += 1;
            if iter > 60 {
                return Err(Error::NoConvergence { sweeps: total, residual: f64::NAN });
            }
            let mut g = (d[l + 1] - d[l]) / (e[l] + e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r } else { -r });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut early = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::lit(2.0) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some((buf, width)) = rows.as_mut() {
                    let width = *width;
                    let (head, tail) = buf.split_at_mut((i + 1) * width);
                    let ri = &mut head[i * width..];
                    let rj = &mut tail[..width];
                    for (x, y) in ri.iter_mut().zip(rj.iter_mut()) {
                        let yi = *y;
                        *y = s * *x + c * yi;
                        *x = c * *x - s * yi;
                    }
                }
            }
            if early {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(total)
}

/// Ascending order of `values`, ties kept in original order.
pub(crate) fn ascending_order<T: Real>(values: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&x, &y| values[x].partial_cmp(&values[y]).expect("finite eigenvalues"));
    order
}

/// Phases `phi_k` with `conj(phi_{k+1}) * i * sub_k * phi_k = |sub_k|`.
pub(crate) fn skew_phases<T: Real>(skew_sub: &[T]) -> Vec<Complex<T>> {
    let mut phases = Vec::with_capacity(skew_sub.len() + 1);
    let mut phi = Complex::new(T::one(), T::zero());
    phases.push(phi);
    for &s in skew_sub {
        let turn = if s >= T::zero() { Complex::i() } else { -Complex::i() };
        phi *= turn;
        // Entries stay exactly in {1, i, -1, -i}.
        phi = Complex::new(phi.re.round(), phi.im.round());
        phases.push(phi);
    }
    phases
}
