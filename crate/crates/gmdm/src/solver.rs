//! Closed-form forward and inverse solvers for three-segment multi-speed
//! Dubins paths.
//!
//! A path is one of the six canonical words {LSL, RSR, LSR, RSL, LRL, RLR},
//! where each segment carries its own constant control `(v_i, omega_i)`.
//! The forward problem composes the three motion primitives; the inverse
//! problem recovers the segment durations `tau_i` from the start/goal poses
//! and the per-segment controls. Both directions are analytical.
//!
//! Infeasible inverse instances return `Ok(None)`; errors are reserved for
//! controls that do not match the requested word.

use serde::{Deserialize, Serialize};

use crate::angle::{signed_mod, ANGLE_TOL, TWO_PI};
use crate::error::{Error, Result};
use crate::se2::{apply_straight, apply_turn, ControlInput, Pose};

/// Tolerance for clamping an arcsin argument that drifted past +-1 due to
/// rounding at the reachability boundary.
const ARCSIN_CLAMP: f64 = 1e-9;

/// Tolerance for clamping a slightly negative straight-length discriminant.
const DISCRIMINANT_CLAMP: f64 = 1e-12;

/// Forward-replay tolerance for returned solutions (meters / radians).
const REPLAY_TOL: f64 = 1e-9;

/// Squared center distance below which the inverse geometry is degenerate
/// (the first and last turn circles share a center).
const DEGENERATE_Q: f64 = 1e-24;

/// The six canonical path words. Turning segments alternate direction in
/// the CCC class; the middle segment of a CSC word is straight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathType {
    Lsl,
    Rsr,
    Lsr,
    Rsl,
    Lrl,
    Rlr,
}

impl PathType {
    /// All six words in the canonical enumeration order.
    pub const ALL: [PathType; 6] = [
        PathType::Lsl,
        PathType::Rsr,
        PathType::Lsr,
        PathType::Rsl,
        PathType::Lrl,
        PathType::Rlr,
    ];

    /// Per-segment turn signs: +1 left, -1 right, 0 straight.
    pub fn signs(&self) -> [i8; 3] {
        match self {
            PathType::Lsl => [1, 0, 1],
            PathType::Rsr => [-1, 0, -1],
            PathType::Lsr => [1, 0, -1],
            PathType::Rsl => [-1, 0, 1],
            PathType::Lrl => [1, -1, 1],
            PathType::Rlr => [-1, 1, -1],
        }
    }

    pub fn is_ccc(&self) -> bool {
        matches!(self, PathType::Lrl | PathType::Rlr)
    }

    pub fn name(&self) -> &'static str {
        match self {
            PathType::Lsl => "LSL",
            PathType::Rsr => "RSR",
            PathType::Lsr => "LSR",
            PathType::Rsl => "RSL",
            PathType::Lrl => "LRL",
            PathType::Rlr => "RLR",
        }
    }

    pub fn parse(s: &str) -> Option<PathType> {
        match s.to_ascii_uppercase().as_str() {
            "LSL" => Some(PathType::Lsl),
            "RSR" => Some(PathType::Rsr),
            "LSR" => Some(PathType::Lsr),
            "RSL" => Some(PathType::Rsl),
            "LRL" => Some(PathType::Lrl),
            "RLR" => Some(PathType::Rlr),
            _ => None,
        }
    }
}

impl std::fmt::Display for PathType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One path segment: a constant control applied for `tau` seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentSpec {
    pub input: ControlInput,
    pub tau: f64,
}

impl SegmentSpec {
    pub fn new(input: ControlInput, tau: f64) -> Self {
        Self { input, tau }
    }

    /// Arc length `v * tau` of the segment.
    pub fn length(&self) -> f64 {
        self.input.v * self.tau
    }

    /// Signed rotation `omega * tau` of the segment.
    pub fn rotation(&self) -> f64 {
        self.input.omega * self.tau
    }
}

/// A solved three-segment path with its intermediate poses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathSolution {
    pub path_type: PathType,
    pub segments: [SegmentSpec; 3],
    /// Total travel time, `tau_1 + tau_2 + tau_3` as stored.
    pub total_time: f64,
    /// Pose at the end of the first segment.
    pub p1: Pose,
    /// Pose at the end of the second segment.
    pub p2: Pose,
}

impl PathSolution {
    /// Total arc length of the path.
    pub fn length(&self) -> f64 {
        self.segments.iter().map(|s| s.length()).sum()
    }

    /// Replay the segments from `p0` with the closed-form primitives.
    pub fn replay(&self, p0: &Pose) -> Result<Pose> {
        let mut p = *p0;
        for seg in &self.segments {
            p = crate::se2::apply_primitive(&p, &seg.input, seg.tau)?;
        }
        Ok(p)
    }
}

/// Intermediate quantities of the inverse problem: the known translation
/// terms `(a, b)` and the signed radii and radius differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseIntermediates {
    pub a: f64,
    pub b: f64,
    pub r1: f64,
    pub r3: f64,
    /// `r3 - r1`.
    pub r31: f64,
    /// `r1 - r2` (CCC only).
    pub r12: Option<f64>,
    /// `r2 - r3` (CCC only).
    pub r23: Option<f64>,
}

impl InverseIntermediates {
    /// Compute the knowns of the inverse problem for the given controls.
    /// The middle differences are populated only when all three segments
    /// turn.
    pub fn new(p0: &Pose, pf: &Pose, controls: &[ControlInput; 3]) -> Self {
        let r1 = controls[0].v / controls[0].omega;
        let r3 = controls[2].v / controls[2].omega;
        let (a, b) = compute_ab(p0, pf, r1, r3);
        let (r12, r23) = match controls[1].signed_radius() {
            Some(r2) => (Some(r1 - r2), Some(r2 - r3)),
            None => (None, None),
        };
        Self {
            a,
            b,
            r1,
            r3,
            r31: r3 - r1,
            r12,
            r23,
        }
    }

    /// Squared distance between the first and last turn-circle centers.
    pub fn center_distance_sq(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }
}

/// The translation terms of the inverse problem:
/// `a = xf - x0 + r1 sin(theta0) - r3 sin(thetaf)` and
/// `b = yf - y0 - r1 cos(theta0) + r3 cos(thetaf)`.
///
/// Geometrically `(a, b)` is the vector from the center of the first turn
/// circle to the center of the last.
pub fn compute_ab(p0: &Pose, pf: &Pose, r1: f64, r3: f64) -> (f64, f64) {
    let a = pf.x - p0.x + r1 * p0.theta.sin() - r3 * pf.theta.sin();
    let b = pf.y - p0.y - r1 * p0.theta.cos() + r3 * pf.theta.cos();
    (a, b)
}

fn check_csc_pattern(specs: &[(&ControlInput, f64); 3]) -> Result<()> {
    let [(u1, t1), (u2, t2), (u3, t3)] = specs;
    if u1.omega == 0.0 || u2.omega != 0.0 || u3.omega == 0.0 {
        return Err(Error::InvalidPathType(
            "CSC requires turn-straight-turn controls".into(),
        ));
    }
    if *t1 < 0.0 || *t2 < 0.0 || *t3 < 0.0 {
        return Err(Error::InvalidArgument(
            "segment durations must be nonnegative".into(),
        ));
    }
    Ok(())
}

fn check_ccc_pattern(specs: &[(&ControlInput, f64); 3]) -> Result<()> {
    let [(u1, t1), (u2, t2), (u3, t3)] = specs;
    if u1.omega == 0.0 || u2.omega == 0.0 || u3.omega == 0.0 {
        return Err(Error::InvalidPathType(
            "CCC requires three turning controls".into(),
        ));
    }
    if u1.omega.signum() == u2.omega.signum() || u2.omega.signum() == u3.omega.signum() {
        return Err(Error::InvalidPathType(
            "consecutive CCC turns must alternate direction".into(),
        ));
    }
    if *t1 < 0.0 || *t2 < 0.0 || *t3 < 0.0 {
        return Err(Error::InvalidArgument(
            "segment durations must be nonnegative".into(),
        ));
    }
    Ok(())
}

/// Forward problem for a turn-straight-turn path: the final pose in one
/// closed-form expression, equal to composing the three primitives.
pub fn forward_csc(p0: &Pose, specs: &[SegmentSpec; 3]) -> Result<Pose> {
    check_csc_pattern(&[
        (&specs[0].input, specs[0].tau),
        (&specs[1].input, specs[1].tau),
        (&specs[2].input, specs[2].tau),
    ])?;
    let r1 = specs[0].input.v / specs[0].input.omega;
    let r3 = specs[2].input.v / specs[2].input.omega;
    let r31 = r3 - r1;
    let delta2 = specs[1].length();
    let phi1 = specs[0].rotation();
    let phi3 = specs[2].rotation();
    let t0 = p0.theta;
    let t1 = t0 + phi1;
    let tf = t1 + phi3;
    Ok(Pose::new(
        p0.x - r1 * t0.sin() - r31 * t1.sin() + delta2 * t1.cos() + r3 * tf.sin(),
        p0.y + r1 * t0.cos() + r31 * t1.cos() + delta2 * t1.sin() - r3 * tf.cos(),
        tf,
    ))
}

/// Forward problem for a turn-turn-turn path with alternating directions.
pub fn forward_ccc(p0: &Pose, specs: &[SegmentSpec; 3]) -> Result<Pose> {
    check_ccc_pattern(&[
        (&specs[0].input, specs[0].tau),
        (&specs[1].input, specs[1].tau),
        (&specs[2].input, specs[2].tau),
    ])?;
    let r1 = specs[0].input.v / specs[0].input.omega;
    let r2 = specs[1].input.v / specs[1].input.omega;
    let r3 = specs[2].input.v / specs[2].input.omega;
    let r12 = r1 - r2;
    let r23 = r2 - r3;
    let phi1 = specs[0].rotation();
    let phi2 = specs[1].rotation();
    let phi3 = specs[2].rotation();
    let t0 = p0.theta;
    let t1 = t0 + phi1;
    let t2 = t1 + phi2;
    let tf = t2 + phi3;
    Ok(Pose::new(
        p0.x - r1 * t0.sin() + r12 * t1.sin() + r23 * t2.sin() + r3 * tf.sin(),
        p0.y + r1 * t0.cos() - r12 * t1.cos() - r23 * t2.cos() - r3 * tf.cos(),
        tf,
    ))
}

fn check_controls_match_type(path_type: PathType, controls: &[ControlInput; 3]) -> Result<()> {
    let signs = path_type.signs();
    for (i, (u, s)) in controls.iter().zip(signs.iter()).enumerate() {
        if !u.v.is_finite() || u.v <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "segment {} speed must be positive",
                i + 1
            )));
        }
        let ok = match s {
            0 => u.omega == 0.0,
            1 => u.omega > 0.0,
            -1 => u.omega < 0.0,
            _ => unreachable!(),
        };
        if !ok {
            return Err(Error::InvalidPathType(format!(
                "segment {} control (omega = {}) inconsistent with {}",
                i + 1,
                u.omega,
                path_type
            )));
        }
    }
    Ok(())
}

fn build_solution(
    path_type: PathType,
    p0: &Pose,
    controls: &[ControlInput; 3],
    taus: [f64; 3],
) -> Result<PathSolution> {
    let seg = |i: usize| SegmentSpec::new(controls[i], taus[i]);
    let p1 = if controls[0].is_turn() {
        apply_turn(p0, &controls[0], taus[0])?
    } else {
        apply_straight(p0, &controls[0], taus[0])?
    };
    let p2 = if controls[1].is_turn() {
        apply_turn(&p1, &controls[1], taus[1])?
    } else {
        apply_straight(&p1, &controls[1], taus[1])?
    };
    Ok(PathSolution {
        path_type,
        segments: [seg(0), seg(1), seg(2)],
        total_time: taus[0] + taus[1] + taus[2],
        p1,
        p2,
    })
}

/// Inverse problem for a CSC word: segment durations from the pose pair and
/// controls, or `None` when the goal lies inside the excluded disk
/// (`a^2 + b^2 < r31^2`).
pub fn inverse_csc(
    p0: &Pose,
    pf: &Pose,
    controls: &[ControlInput; 3],
    path_type: PathType,
) -> Result<Option<PathSolution>> {
    if path_type.is_ccc() {
        return Err(Error::InvalidPathType(format!(
            "{path_type} is not a CSC word"
        )));
    }
    check_controls_match_type(path_type, controls)?;

    let knowns = InverseIntermediates::new(p0, pf, controls);
    let (a, b, r31) = (knowns.a, knowns.b, knowns.r31);
    let q = knowns.center_distance_sq();

    // Feasibility (Theorem-1 condition q >= r31^2), with a clamp band for
    // rounding at the boundary: an absolute floor plus the equivalent of
    // allowing the arcsin argument to overshoot +-1 by ARCSIN_CLAMP.
    let disc = q - r31 * r31;
    if disc < -(DISCRIMINANT_CLAMP + 2.0 * ARCSIN_CLAMP * q) {
        return Ok(None);
    }
    let delta2 = disc.max(0.0).sqrt();

    // Degenerate geometry: the first and last turn circles share a center.
    // With r31 = 0 any rotation split works; take tau_1 = 0 so the shortest
    // representative (all-zero when the headings agree) is returned.
    let theta1 = if q < DEGENERATE_Q {
        if r31.abs() > ANGLE_TOL {
            return Ok(None);
        }
        p0.theta
    } else {
        // Equivalent to arcsin(-r31/sqrt(q)) - atan2(-b, a), but computed
        // jointly with delta2 so the pair stays consistent at the
        // reachability boundary where the arcsin form is ill-conditioned.
        b.atan2(a) - r31.atan2(delta2)
    };

    let phi1 = signed_mod(theta1 - p0.theta, TWO_PI * controls[0].omega.signum());
    let phi3 = signed_mod(pf.theta - theta1, TWO_PI * controls[2].omega.signum());
    let taus = [
        phi1 / controls[0].omega,
        delta2 / controls[1].v,
        phi3 / controls[2].omega,
    ];
    Ok(Some(build_solution(path_type, p0, controls, taus)?))
}

/// Inverse problem for a CCC word. Uses the `pi - arcsin` branch and then
/// requires the middle rotation to satisfy `|phi_2| in (pi, 2*pi)`;
/// instances that violate either the annulus condition or the middle-arc
/// constraint return `None`.
pub fn inverse_ccc(
    p0: &Pose,
    pf: &Pose,
    controls: &[ControlInput; 3],
    path_type: PathType,
) -> Result<Option<PathSolution>> {
    if !path_type.is_ccc() {
        return Err(Error::InvalidPathType(format!(
            "{path_type} is not a CCC word"
        )));
    }
    check_controls_match_type(path_type, controls)?;

    let knowns = InverseIntermediates::new(p0, pf, controls);
    let (a, b) = (knowns.a, knowns.b);
    let r12 = knowns.r12.expect("CCC controls have a middle radius");
    let r23 = knowns.r23.expect("CCC controls have a middle radius");
    let q = knowns.center_distance_sq();

    // Coincident first/last circle centers leave the tangency direction
    // undetermined; the middle-arc constraint has no unique representative.
    if q < DEGENERATE_Q {
        return Ok(None);
    }
    // Annulus feasibility via the arcsin arguments
    // s1 = (q + r12^2 - r23^2) / (2 r12 sqrt(q)) and its r23 counterpart:
    // n = (2 r sqrt(q))^2 (1 - s^2) must be nonnegative. The angles use
    // theta = pi - arcsin(s) - atan2(-b, a) rewritten through atan2 of the
    // scaled sine/cosine pair, which stays well-conditioned where s -> +-1.
    let m1 = q + r12 * r12 - r23 * r23;
    let m2 = q + r23 * r23 - r12 * r12;
    let n1 = 4.0 * r12 * r12 * q - m1 * m1;
    let n2 = 4.0 * r23 * r23 * q - m2 * m2;
    if n1 < -(DISCRIMINANT_CLAMP + 8.0 * ARCSIN_CLAMP * r12 * r12 * q)
        || n2 < -(DISCRIMINANT_CLAMP + 8.0 * ARCSIN_CLAMP * r23 * r23 * q)
    {
        return Ok(None);
    }
    let psi = b.atan2(a);
    let theta1 = (m1 * r12.signum()).atan2(-n1.max(0.0).sqrt()) + psi;
    let theta2 = (m2 * r23.signum()).atan2(-n2.max(0.0).sqrt()) + psi;

    let phi1 = signed_mod(theta1 - p0.theta, TWO_PI * controls[0].omega.signum());
    let phi2 = signed_mod(theta2 - theta1, TWO_PI * controls[1].omega.signum());
    let phi3 = signed_mod(pf.theta - theta2, TWO_PI * controls[2].omega.signum());

    // Middle-arc gate; the boundary |phi_2| = pi (outer annulus edge) is
    // admitted within the angle tolerance.
    if phi2.abs() < std::f64::consts::PI - ANGLE_TOL {
        return Ok(None);
    }
    let taus = [
        phi1 / controls[0].omega,
        phi2 / controls[1].omega,
        phi3 / controls[2].omega,
    ];
    let sol = build_solution(path_type, p0, controls, taus)?;
    // On the inner annulus boundary the true middle arc is 0 or a full
    // turn, both outside (pi, 2*pi); rounding can disguise it as a value
    // just under 2*pi that passes the gate but misses the goal. Replay
    // catches exactly those, keeping returned solutions on contract.
    let end = apply_turn(&sol.p2, &controls[2], taus[2])?;
    if end.position_distance(pf) > REPLAY_TOL || end.heading_distance(pf) > REPLAY_TOL {
        return Ok(None);
    }
    Ok(Some(sol))
}

/// Solve the inverse problem for any word, dispatching on its class.
pub fn solve_type(
    p0: &Pose,
    pf: &Pose,
    controls: &[ControlInput; 3],
    path_type: PathType,
) -> Result<Option<PathSolution>> {
    if path_type.is_ccc() {
        inverse_ccc(p0, pf, controls, path_type)
    } else {
        inverse_csc(p0, pf, controls, path_type)
    }
}

/// Controls for a word with every turn at `+-omega_max` and the given
/// per-segment speeds.
pub fn controls_for(path_type: PathType, speeds: [f64; 3], omega_max: f64) -> [ControlInput; 3] {
    let signs = path_type.signs();
    let mk = |i: usize| ControlInput::new(speeds[i], f64::from(signs[i]) * omega_max);
    [mk(0), mk(1), mk(2)]
}
