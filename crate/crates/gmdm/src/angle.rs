//! Signed-modulus angle arithmetic.
//!
//! All heading bookkeeping in the crate goes through [`signed_mod`], defined
//! as `mod(a, m) = a - m * floor(a / m)`. For `m > 0` the result lies in
//! `[0, m)`; for `m < 0` in `(m, 0]`. Turn rotations are computed as
//! `mod(delta_theta, 2*pi*sign(omega))`, which makes them nonnegative for
//! left turns and nonpositive for right turns by construction.

use std::f64::consts::PI;

pub const TWO_PI: f64 = 2.0 * PI;

/// Angle equality tolerance used across the library (radians).
pub const ANGLE_TOL: f64 = 1e-9;

/// Floor-based signed modulus: `a - m * floor(a / m)`.
///
/// Returns a value in `[0, m)` for `m > 0` and in `(m, 0]` for `m < 0`.
/// Exact multiples of `m` map to zero, never to a full period.
///
/// # Panics
/// Panics if `m == 0`.
pub fn signed_mod(a: f64, m: f64) -> f64 {
    assert!(m != 0.0, "signed_mod: modulus must be nonzero");
    let mut r = a - m * (a / m).floor();
    // Rounding can land exactly on the open end of the range; fold it back.
    if m > 0.0 {
        if r >= m {
            r -= m;
        }
        if r < 0.0 {
            r += m;
        }
    } else {
        if r <= m {
            r -= m;
        }
        if r > 0.0 {
            r += m;
        }
    }
    r
}

/// Normalize an angle to `[0, 2*pi)`.
pub fn normalize(theta: f64) -> f64 {
    signed_mod(theta, TWO_PI)
}

/// Absolute difference between two angles on the circle, in `[0, pi]`.
pub fn wrapped_distance(a: f64, b: f64) -> f64 {
    let d = signed_mod(a - b, TWO_PI);
    d.min(TWO_PI - d)
}
