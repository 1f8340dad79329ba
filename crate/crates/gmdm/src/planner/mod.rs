//! Planner harnesses built on the closed-form solvers: single-query best
//! path selection, a lookup-table grid A*, an RRT*-style sampler, and an
//! exact small-instance traveling-salesman solver.

mod grid;
mod rrt;
mod tsp;

pub use grid::{
    build_lookup_table, plan_grid, plan_grid_with_table, GridSpec, LookupTable, NEIGHBOR_OFFSETS,
};
pub use rrt::{plan_rrt_star, RrtConfig};
pub use tsp::{solve_tsp, TspResult};

use serde::{Deserialize, Serialize};

use crate::candidates::CandidateSet;
use crate::cost::{collides, path_cost, sample_path, RiskParams};
use crate::env::Environment;
use crate::error::Result;
use crate::se2::Pose;
use crate::solver::{solve_type, PathSolution};

/// Default discretization step for collision checking and cost quadrature.
pub const DEFAULT_DS_MAX: f64 = 0.05;

/// Best single-query connection: the winning solution and its cost.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BestPath {
    pub solution: PathSolution,
    pub cost: f64,
}

/// Solve every candidate, drop infeasible and colliding ones, and return
/// the cheapest. Cost is travel time when `env` is absent or `lambda = 0`,
/// and the time-risk functional otherwise. Ties go to the earliest
/// candidate in enumeration order.
pub fn best_path(
    p0: &Pose,
    pf: &Pose,
    candidates: &CandidateSet,
    env: Option<&Environment>,
    params: &RiskParams,
    ds_max: f64,
) -> Result<Option<BestPath>> {
    let mut best: Option<BestPath> = None;
    for cand in &candidates.entries {
        let Some(sol) = solve_type(p0, pf, &cand.controls, cand.path_type)? else {
            continue;
        };
        let cost = match env {
            None => sol.total_time,
            Some(env) => {
                let sampled = sample_path(p0, &sol, ds_max)?;
                if collides(env, &sampled) {
                    continue;
                }
                if params.lambda == 0.0 {
                    sol.total_time
                } else {
                    let j = path_cost(env, &sampled, params);
                    if j.is_infinite() {
                        continue;
                    }
                    j
                }
            }
        };
        if best.as_ref().is_none_or(|b| cost < b.cost) {
            best = Some(BestPath {
                solution: sol,
                cost,
            });
        }
    }
    Ok(best)
}

/// Search diagnostics attached to a plan. Wall time is informational and
/// excluded from serialized artifacts so identical inputs produce identical
/// output files.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Nodes expanded (A*) or iterations executed (RRT*).
    pub nodes_expanded: usize,
    /// Closed states (A*) or vertices in the tree (RRT*).
    pub tree_size: usize,
    #[serde(skip)]
    pub wall_time_s: f64,
}

/// A multi-waypoint plan: the waypoints, one solved path per leg, and the
/// accumulated cost and travel time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanResult {
    pub waypoints: Vec<Pose>,
    pub solutions: Vec<PathSolution>,
    pub cost: f64,
    pub total_time: f64,
    pub diagnostics: Diagnostics,
}

impl PlanResult {
    /// An empty plan standing at `pose` with zero cost.
    pub fn empty(pose: Pose) -> Self {
        Self {
            waypoints: vec![pose],
            solutions: Vec::new(),
            cost: 0.0,
            total_time: 0.0,
            diagnostics: Diagnostics::default(),
        }
    }

    /// Verify the continuity of the leg chain: replaying each leg from its
    /// waypoint must land on the next waypoint within `tol`.
    pub fn max_joint_error(&self) -> Result<f64> {
        let mut worst = 0.0_f64;
        for (i, sol) in self.solutions.iter().enumerate() {
            let end = sol.replay(&self.waypoints[i])?;
            let target = &self.waypoints[i + 1];
            worst = worst
                .max(end.position_distance(target))
                .max(end.heading_distance(target));
        }
        Ok(worst)
    }

    /// Concatenated polyline of the plan at the given sampling step.
    pub fn polyline(&self, ds_max: f64) -> Result<Vec<Pose>> {
        let mut points = Vec::new();
        for (i, sol) in self.solutions.iter().enumerate() {
            let sampled = sample_path(&self.waypoints[i], sol, ds_max)?;
            for s in sampled.samples {
                if points
                    .last()
                    .is_none_or(|p: &Pose| p.position_distance(&s.pose) > 1e-12)
                {
                    points.push(s.pose);
                }
            }
        }
        if points.is_empty() {
            points.push(self.waypoints[0]);
        }
        Ok(points)
    }
}
