//! The time-risk path functional.
//!
//! The risk at a point scales with how soon the vehicle would hit the
//! obstacle straight ahead: with collision time `t_c = d_c / v` and a
//! risk-free threshold `t_star`,
//!
//! ```text
//! R = 1 + (t_star/t_c) * ln(t_star/t_c)   if t_c <= t_star
//! R = 1                                    otherwise
//! ```
//!
//! and a path costs `J = integral of R(s)^lambda / v(s) ds` over arc
//! length. With `lambda = 0` the cost reduces to travel time. Paths are
//! discretized segment by segment with the closed-form primitives and
//! integrated with the trapezoidal rule; the piecewise-constant speed makes
//! the `lambda = 0` case quadrature-exact.

use serde::{Deserialize, Serialize};

use crate::env::Environment;
use crate::error::{Error, Result};
use crate::se2::{apply_primitive, Pose};
use crate::solver::PathSolution;

/// Risk parameters: the risk-free collision threshold `t_star` (seconds)
/// and the risk weight `lambda` (dimensionless, >= 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiskParams {
    pub t_star: f64,
    pub lambda: f64,
}

impl RiskParams {
    pub fn new(t_star: f64, lambda: f64) -> Result<Self> {
        if t_star <= 0.0 || !t_star.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "t_star must be positive, got {t_star}"
            )));
        }
        if lambda < 0.0 || !lambda.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "lambda must be nonnegative, got {lambda}"
            )));
        }
        Ok(Self { t_star, lambda })
    }

    /// Paper-standard defaults: `t_star = 3 s`, `lambda = 2`.
    pub fn standard() -> Self {
        Self {
            t_star: 3.0,
            lambda: 2.0,
        }
    }
}

/// Risk evaluated at one pose: tangential clearance, collision time, and
/// the risk value `R >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskSample {
    pub d_c: f64,
    pub t_c: f64,
    pub risk: f64,
}

/// Risk value from a collision time.
pub fn risk_from_collision_time(t_c: f64, params: &RiskParams) -> f64 {
    if t_c >= params.t_star {
        1.0
    } else if t_c > 0.0 {
        let u = params.t_star / t_c;
        1.0 + u * u.ln()
    } else {
        f64::INFINITY
    }
}

/// Tangential risk at a pose moving at speed `v`.
pub fn risk_at(env: &Environment, pose: &Pose, v: f64, params: &RiskParams) -> RiskSample {
    debug_assert!(v > 0.0);
    let d_c = env.clearance_ray(pose);
    let t_c = d_c / v;
    RiskSample {
        d_c,
        t_c,
        risk: risk_from_collision_time(t_c, params),
    }
}

/// One discretization sample: the pose, the speed of the segment that owns
/// it, and the arc length to the next sample (`0` at segment ends).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSample {
    pub pose: Pose,
    pub v: f64,
    pub ds: f64,
}

/// A path discretized at bounded arc-length steps.
///
/// Each positive-length segment contributes samples from its start pose to
/// its end pose inclusive, generated in closed form from the segment start
/// (no integration drift). Where the speed switches, the joint pose appears
/// once per segment with that segment's speed, separated by a zero step, so
/// every positive step lies inside a single segment and the quadrature of a
/// piecewise-constant integrand stays exact. Zero-length segments are
/// skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPath {
    pub samples: Vec<PathSample>,
}

impl SampledPath {
    /// Total arc length, the sum of all steps.
    pub fn length(&self) -> f64 {
        self.samples.iter().map(|s| s.ds).sum()
    }

    pub fn end_pose(&self) -> Option<Pose> {
        self.samples.last().map(|s| s.pose)
    }
}

/// Discretize a solved path from `p0` at arc-length steps of at most
/// `ds_max`, including segment endpoints.
pub fn sample_path(p0: &Pose, sol: &PathSolution, ds_max: f64) -> Result<SampledPath> {
    if ds_max <= 0.0 || ds_max.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "ds_max must be positive, got {ds_max}"
        )));
    }
    let mut samples = Vec::new();
    let mut seg_start = *p0;
    for seg in &sol.segments {
        let delta = seg.length();
        let next_start = apply_primitive(&seg_start, &seg.input, seg.tau)?;
        if delta <= 0.0 {
            seg_start = next_start;
            continue;
        }
        let n = (delta / ds_max).ceil().max(1.0) as usize;
        let ds = delta / n as f64;
        for j in 0..n {
            let pose = if j == 0 {
                seg_start
            } else {
                apply_primitive(&seg_start, &seg.input, seg.tau * j as f64 / n as f64)?
            };
            samples.push(PathSample {
                pose,
                v: seg.input.v,
                ds,
            });
        }
        samples.push(PathSample {
            pose: next_start,
            v: seg.input.v,
            ds: 0.0,
        });
        seg_start = next_start;
    }
    if samples.is_empty() {
        // Zero-duration path: keep the start pose so costs are well defined.
        samples.push(PathSample {
            pose: *p0,
            v: sol.segments[0].input.v,
            ds: 0.0,
        });
    }
    Ok(SampledPath { samples })
}

/// Whether any sample lies in collision.
pub fn collides(env: &Environment, sampled: &SampledPath) -> bool {
    sampled
        .samples
        .iter()
        .any(|s| env.point_in_collision(s.pose.x, s.pose.y))
}

/// Trapezoidal quadrature of `R(s)^lambda / v(s)` over the sampled path.
/// Returns infinity when any sample is in collision.
pub fn path_cost(env: &Environment, sampled: &SampledPath, params: &RiskParams) -> f64 {
    let integrand = |s: &PathSample| -> f64 {
        if env.point_in_collision(s.pose.x, s.pose.y) {
            return f64::INFINITY;
        }
        if params.lambda == 0.0 {
            return 1.0 / s.v;
        }
        let r = risk_at(env, &s.pose, s.v, params).risk;
        r.powf(params.lambda) / s.v
    };
    let mut total = 0.0;
    let mut prev: Option<f64> = None;
    for (i, s) in sampled.samples.iter().enumerate() {
        let f = integrand(s);
        if f.is_infinite() {
            return f64::INFINITY;
        }
        if let Some(fp) = prev {
            let ds = sampled.samples[i - 1].ds;
            if ds > 0.0 {
                total += ds * 0.5 * (fp + f);
            }
        }
        prev = Some(f);
    }
    total
}
