//! Core SE(2) types and the constant-input motion primitives.
//!
//! A path segment applies one constant control `(v, omega)` for a duration
//! `tau`. Turning motion (`omega != 0`) traces a circular arc of signed
//! radius `v / omega`; straight motion (`omega == 0`) advances along the
//! heading. Both have closed forms, so composing segments never drifts.

use serde::{Deserialize, Serialize};

use crate::angle::{self, normalize};
use crate::error::{Error, Result};

/// A planar pose `(x, y, theta)` with the heading normalized to `[0, 2*pi)`.
///
/// Construct through [`Pose::new`], which normalizes the heading. Treat the
/// fields as read-only; code that edits `theta` in place is responsible for
/// keeping it normalized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        debug_assert!(
            x.is_finite() && y.is_finite() && theta.is_finite(),
            "pose components must be finite"
        );
        Self {
            x,
            y,
            theta: normalize(theta),
        }
    }

    /// Euclidean distance between positions, ignoring heading.
    pub fn position_distance(&self, other: &Pose) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Heading distance on the circle, in `[0, pi]`.
    pub fn heading_distance(&self, other: &Pose) -> f64 {
        angle::wrapped_distance(self.theta, other.theta)
    }
}

/// A constant control input: speed `v` (m/s) and turning rate `omega` (rad/s).
///
/// `omega > 0` turns left, `omega < 0` turns right, `omega == 0` goes
/// straight. Speeds must be positive; range checks against a vehicle's
/// limits happen where controls are constructed (see
/// [`VehicleLimits::check_input`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlInput {
    pub v: f64,
    pub omega: f64,
}

impl ControlInput {
    pub fn new(v: f64, omega: f64) -> Self {
        debug_assert!(v.is_finite() && v > 0.0, "speed must be positive");
        debug_assert!(omega.is_finite());
        Self { v, omega }
    }

    pub fn is_turn(&self) -> bool {
        self.omega != 0.0
    }

    /// Signed turning radius `v / omega`. None for straight motion.
    pub fn signed_radius(&self) -> Option<f64> {
        if self.omega == 0.0 {
            None
        } else {
            Some(self.v / self.omega)
        }
    }
}

/// Speed and turning-rate envelope of the vehicle.
///
/// The implied curvature range is `[0, omega_max / v_min]`; the tightest
/// turning radius is `v_min / omega_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VehicleLimits {
    pub v_min: f64,
    pub v_max: f64,
    pub omega_max: f64,
}

impl VehicleLimits {
    pub fn new(v_min: f64, v_max: f64, omega_max: f64) -> Result<Self> {
        if !(v_min > 0.0 && v_min <= v_max && omega_max > 0.0)
            || !v_min.is_finite()
            || !v_max.is_finite()
            || !omega_max.is_finite()
        {
            return Err(Error::InvalidArgument(format!(
                "vehicle limits require 0 < v_min <= v_max and omega_max > 0, \
                 got v_min={v_min}, v_max={v_max}, omega_max={omega_max}"
            )));
        }
        Ok(Self {
            v_min,
            v_max,
            omega_max,
        })
    }

    /// Largest turning radius, `v_max / omega_max`.
    pub fn max_radius(&self) -> f64 {
        self.v_max / self.omega_max
    }

    /// Tightest turning radius, `v_min / omega_max`.
    pub fn min_radius(&self) -> f64 {
        self.v_min / self.omega_max
    }

    pub fn check_input(&self, u: &ControlInput) -> Result<()> {
        if u.v < self.v_min || u.v > self.v_max {
            return Err(Error::InvalidArgument(format!(
                "speed {} outside [{}, {}]",
                u.v, self.v_min, self.v_max
            )));
        }
        if u.omega.abs() > self.omega_max {
            return Err(Error::InvalidArgument(format!(
                "|omega| = {} exceeds omega_max = {}",
                u.omega.abs(),
                self.omega_max
            )));
        }
        Ok(())
    }
}

/// Derived geometry of one path segment: signed radius `r = v/omega`
/// (None for straights), arc length `delta = v*tau`, and signed rotation
/// `phi = omega*tau` with `|phi| < 2*pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentGeometry {
    pub r: Option<f64>,
    pub delta: f64,
    pub phi: f64,
}

impl SegmentGeometry {
    pub fn of(u: &ControlInput, tau: f64) -> Self {
        Self {
            r: u.signed_radius(),
            delta: u.v * tau,
            phi: u.omega * tau,
        }
    }
}

/// Turning motion: advance `p` along a circular arc under `u` for `tau`
/// seconds. Requires `u.omega != 0` and `tau >= 0`.
pub fn apply_turn(p: &Pose, u: &ControlInput, tau: f64) -> Result<Pose> {
    if tau < 0.0 || !tau.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "duration must be nonnegative, got {tau}"
        )));
    }
    if u.omega == 0.0 {
        return Err(Error::WrongPrimitive(
            "apply_turn requires omega != 0".into(),
        ));
    }
    let r = u.v / u.omega;
    let theta1 = p.theta + u.omega * tau;
    Ok(Pose::new(
        p.x - r * (p.theta.sin() - theta1.sin()),
        p.y + r * (p.theta.cos() - theta1.cos()),
        theta1,
    ))
}

/// Straight-line motion: advance `p` along its heading at speed `u.v` for
/// `tau` seconds. Requires `u.omega == 0` and `tau >= 0`.
pub fn apply_straight(p: &Pose, u: &ControlInput, tau: f64) -> Result<Pose> {
    if tau < 0.0 || !tau.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "duration must be nonnegative, got {tau}"
        )));
    }
    if u.omega != 0.0 {
        return Err(Error::WrongPrimitive(
            "apply_straight requires omega == 0".into(),
        ));
    }
    Ok(Pose::new(
        p.x + u.v * tau * p.theta.cos(),
        p.y + u.v * tau * p.theta.sin(),
        p.theta,
    ))
}

/// Constant-input motion primitive: dispatches on `omega`.
pub fn apply_primitive(p: &Pose, u: &ControlInput, tau: f64) -> Result<Pose> {
    if u.omega != 0.0 {
        apply_turn(p, u, tau)
    } else {
        apply_straight(p, u, tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    fn assert_pose_close(p: &Pose, x: f64, y: f64, theta: f64, tol: f64) {
        assert!((p.x - x).abs() < tol, "x: {} vs {}", p.x, x);
        assert!((p.y - y).abs() < tol, "y: {} vs {}", p.y, y);
        assert!(
            angle::wrapped_distance(p.theta, theta) < tol,
            "theta: {} vs {}",
            p.theta,
            theta
        );
    }

    #[test]
    fn quarter_circle_left() {
        let p = Pose::new(0.0, 0.0, 0.0);
        let u = ControlInput::new(1.0, 1.0);
        let q = apply_turn(&p, &u, FRAC_PI_2).unwrap();
        assert_pose_close(&q, 1.0, 1.0, FRAC_PI_2, 1e-12);
    }

    #[test]
    fn half_circle_right() {
        let p = Pose::new(0.0, 0.0, 0.0);
        let u = ControlInput::new(1.0, -1.0);
        let q = apply_primitive(&p, &u, PI).unwrap();
        assert_pose_close(&q, 0.0, -2.0, PI, 1e-12);
    }

    #[test]
    fn zero_duration_is_identity() {
        let p = Pose::new(0.3, -1.7, 2.5);
        for u in [ControlInput::new(0.7, 0.9), ControlInput::new(0.7, 0.0)] {
            let q = apply_primitive(&p, &u, 0.0).unwrap();
            assert_eq!(q, p);
        }
    }

    #[test]
    fn straight_advances() {
        let p = Pose::new(0.0, 0.0, 0.0);
        let q = apply_straight(&p, &ControlInput::new(1.0, 0.0), 2.0).unwrap();
        assert_pose_close(&q, 2.0, 0.0, 0.0, 1e-12);

        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let q = apply_straight(&p, &ControlInput::new(0.5, 0.0), 4.0).unwrap();
        assert_pose_close(&q, 0.0, 2.0, FRAC_PI_2, 1e-12);

        let p = Pose::new(1.0, 1.0, FRAC_PI_4);
        let q = apply_straight(&p, &ControlInput::new(1.0, 0.0), SQRT_2).unwrap();
        assert_pose_close(&q, 2.0, 2.0, FRAC_PI_4, 1e-12);
    }

    #[test]
    fn negative_duration_rejected() {
        let p = Pose::new(0.0, 0.0, 0.0);
        assert!(apply_primitive(&p, &ControlInput::new(1.0, 1.0), -0.1).is_err());
        assert!(apply_straight(&p, &ControlInput::new(1.0, 0.0), -0.1).is_err());
    }

    #[test]
    fn wrong_primitive_rejected() {
        let p = Pose::new(0.0, 0.0, 0.0);
        assert!(matches!(
            apply_turn(&p, &ControlInput::new(1.0, 0.0), 1.0),
            Err(Error::WrongPrimitive(_))
        ));
        assert!(matches!(
            apply_straight(&p, &ControlInput::new(1.0, 0.5), 1.0),
            Err(Error::WrongPrimitive(_))
        ));
    }

    #[test]
    fn limits_validate_inputs() {
        let limits = VehicleLimits::new(0.3, 1.0, 1.0).unwrap();
        assert!(limits.check_input(&ControlInput::new(0.5, 0.7)).is_ok());
        assert!(limits.check_input(&ControlInput::new(0.2, 0.0)).is_err());
        assert!(limits.check_input(&ControlInput::new(0.5, -1.5)).is_err());
        assert!(VehicleLimits::new(0.0, 1.0, 1.0).is_err());
        assert!(VehicleLimits::new(1.2, 1.0, 1.0).is_err());
    }

    #[test]
    fn segment_geometry_of_turn() {
        let u = ControlInput::new(0.5, -1.0);
        let g = SegmentGeometry::of(&u, 2.0);
        assert_eq!(g.r, Some(-0.5));
        assert_eq!(g.delta, 1.0);
        assert_eq!(g.phi, -2.0);
        // For a turn, delta = |r * phi|.
        assert!((g.delta - (g.r.unwrap() * g.phi).abs()).abs() < 1e-15);
    }
}
