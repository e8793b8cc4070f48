//! Shared cosine/sine tables at the n-th roots of unity.
//!
//! Values are computed per entry from the angle 2πt/n (no recurrences), with
//! the exact symmetries cos(2π(n-t)/n) = cos(2πt/n) and
//! sin(2π(n-t)/n) = -sin(2πt/n) enforced bitwise so that matrices built from
//! the tables are exactly symmetric / antisymmetric and exactly circulant.

use std::f64::consts::PI;

/// `table[t] = cos(2π t / n)` for `0 <= t < n`.
pub(crate) fn cos_table(n: usize) -> Vec<f64> {
    (0..n)
        .map(|t| {
            let t = t.min(n - t);
            if 4 * t == n {
                0.0
            } else {
                (2.0 * PI * t as f64 / n as f64).cos()
            }
        })
        .collect()
}

/// `table[t] = sin(2π t / n)` for `0 <= t < n`.
pub(crate) fn sin_table(n: usize) -> Vec<f64> {
    (0..n)
        .map(|t| {
            if t == 0 || 2 * t == n {
                0.0
            } else if 2 * t < n {
                (2.0 * PI * t as f64 / n as f64).sin()
            } else {
                -(2.0 * PI * (n - t) as f64 / n as f64).sin()
            }
        })
        .collect()
}
