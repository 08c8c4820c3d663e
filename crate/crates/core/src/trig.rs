//! `sin(pi k / d)` and `cos(pi k / d)` for integer `k`, reduced exactly in
//! integers first so that large multiples of the angle do not drift.

use crate::scalar::Real;

/// `sin(pi * k / d)`; exactly zero when `k` is a multiple of `d`.
pub fn sin_pi_ratio<T: Real>(k: i64, d: u64) -> T {
    assert!(d > 0);
    let d = d as i64;
    let period = 2 * d;
    let mut r = k.rem_euclid(period);
    let mut sign = T::one();
    if r >= d {
        r -= d;
        sign = -sign;
    }
    if r == 0 {
        return T::zero();
    }
    // sin(pi r/d) = sin(pi (d-r)/d): use the smaller argument.
    let r = r.min(d - r);
    sign * (T::PI() * T::int(r) / T::int(d)).sin()
}

/// `cos(pi * k / d)`.
pub fn cos_pi_ratio<T: Real>(k: i64, d: u64) -> T {
    // cos(x) = sin(x + pi/2): shift by d/2 when integral, else evaluate directly.
    let di = d as i64;
    if di % 2 == 0 {
        return sin_pi_ratio(k + di / 2, d);
    }
    sin_pi_ratio(2 * k + di, 2 * d)
}
