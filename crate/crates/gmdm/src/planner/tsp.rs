//! Exact small-instance traveling-salesman tours over discretized headings.
//!
//! Every point of interest gets a finite set of evenly spaced candidate
//! headings. All required pose-pair connections are solved up front with
//! the closed-form model; the optimal visiting order and heading assignment
//! are then found exactly by dynamic programming over (visited subset,
//! final pose) states, which minimizes over all permutations and heading
//! choices. The tour starts and ends at the start pose.

use serde::{Deserialize, Serialize};

use crate::angle::TWO_PI;
use crate::candidates::CandidateSet;
use crate::cost::RiskParams;
use crate::env::Environment;
use crate::error::{Error, Result};
use crate::se2::Pose;
use crate::solver::PathSolution;

use super::{best_path, Diagnostics, PlanResult};

/// Exhaustive-regime bound: tours are solved exactly up to this many points.
pub const MAX_TSP_POINTS: usize = 8;

/// An optimal tour: visiting order, chosen heading index per point, the
/// assembled plan, and how many pose pairs were solved to build it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TspResult {
    pub order: Vec<usize>,
    pub headings: Vec<usize>,
    pub plan: PlanResult,
    pub pose_pairs_solved: usize,
}

/// Solve the tour exactly. Costs are travel time in an empty workspace and
/// the time-risk functional when an environment is given.
pub fn solve_tsp(
    points: &[[f64; 2]],
    headings_per_point: usize,
    start: &Pose,
    candidates: &CandidateSet,
    env: Option<&Environment>,
    params: &RiskParams,
    ds_max: f64,
) -> Result<Option<TspResult>> {
    let n = points.len();
    if n == 0 {
        return Err(Error::InvalidArgument("no points to visit".into()));
    }
    if n > MAX_TSP_POINTS {
        return Err(Error::InvalidArgument(format!(
            "exact tours are limited to {MAX_TSP_POINTS} points, got {n}"
        )));
    }
    if headings_per_point == 0 {
        return Err(Error::InvalidArgument(
            "need at least one heading per point".into(),
        ));
    }
    let h = headings_per_point;
    let pose_of =
        |i: usize, hi: usize| Pose::new(points[i][0], points[i][1], TWO_PI * hi as f64 / h as f64);

    let mut pairs = 0usize;
    let mut solve = |from: &Pose, to: &Pose| -> Result<Option<(PathSolution, f64)>> {
        pairs += 1;
        Ok(best_path(from, to, candidates, env, params, ds_max)?.map(|b| (b.solution, b.cost)))
    };

    // start -> (i, hi), (i, hi) -> (j, hj) for i != j, (i, hi) -> start.
    let mut from_start = vec![None; n * h];
    let mut to_start = vec![None; n * h];
    let mut between = vec![None; n * h * n * h];
    let at = |i: usize, hi: usize| i * h + hi;
    for i in 0..n {
        for hi in 0..h {
            let p = pose_of(i, hi);
            from_start[at(i, hi)] = solve(start, &p)?;
            to_start[at(i, hi)] = solve(&p, start)?;
            for j in 0..n {
                if i == j {
                    continue;
                }
                for hj in 0..h {
                    let q = pose_of(j, hj);
                    between[at(i, hi) * n * h + at(j, hj)] = solve(&p, &q)?;
                }
            }
        }
    }

    // DP over (visited subset, last pose).
    let full = (1usize << n) - 1;
    let states = (full + 1) * n * h;
    let mut dp = vec![f64::INFINITY; states];
    let mut back: Vec<Option<usize>> = vec![None; states];
    let idx = |mask: usize, i: usize, hi: usize| (mask * n + i) * h + hi;
    for i in 0..n {
        for hi in 0..h {
            if let Some((_, c)) = &from_start[at(i, hi)] {
                dp[idx(1 << i, i, hi)] = *c;
            }
        }
    }
    for mask in 1..=full {
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            for hi in 0..h {
                let cur = dp[idx(mask, i, hi)];
                if !cur.is_finite() {
                    continue;
                }
                for j in 0..n {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    for hj in 0..h {
                        if let Some((_, c)) = &between[at(i, hi) * n * h + at(j, hj)] {
                            let next = cur + c;
                            let target = idx(mask | (1 << j), j, hj);
                            if next < dp[target] {
                                dp[target] = next;
                                back[target] = Some(idx(mask, i, hi));
                            }
                        }
                    }
                }
            }
        }
    }

    let mut best_total = f64::INFINITY;
    let mut best_end = None;
    for i in 0..n {
        for hi in 0..h {
            if let Some((_, c)) = &to_start[at(i, hi)] {
                let total = dp[idx(full, i, hi)] + c;
                if total < best_total {
                    best_total = total;
                    best_end = Some(idx(full, i, hi));
                }
            }
        }
    }
    let Some(mut state) = best_end else {
        return Ok(None);
    };

    // Reconstruct the visiting order.
    let mut rev: Vec<(usize, usize)> = Vec::new();
    loop {
        let hi = state % h;
        let i = (state / h) % n;
        rev.push((i, hi));
        match back[state] {
            Some(prev) => state = prev,
            None => break,
        }
    }
    rev.reverse();
    let order: Vec<usize> = rev.iter().map(|&(i, _)| i).collect();
    let mut headings = vec![0usize; n];
    for &(i, hi) in &rev {
        headings[i] = hi;
    }

    // Assemble the plan along the tour.
    let mut waypoints = vec![*start];
    let mut solutions = Vec::new();
    let (first, first_h) = rev[0];
    let (sol, _) = from_start[at(first, first_h)]
        .clone()
        .expect("start leg solved");
    waypoints.push(pose_of(first, first_h));
    solutions.push(sol);
    for w in rev.windows(2) {
        let (i, hi) = w[0];
        let (j, hj) = w[1];
        let (sol, _) = between[at(i, hi) * n * h + at(j, hj)]
            .clone()
            .expect("leg on optimal tour solved");
        waypoints.push(pose_of(j, hj));
        solutions.push(sol);
    }
    let (last, last_h) = *rev.last().expect("tour nonempty");
    let (sol, _) = to_start[at(last, last_h)]
        .clone()
        .expect("return leg solved");
    waypoints.push(*start);
    solutions.push(sol);

    let total_time: f64 = solutions.iter().map(|s| s.total_time).sum();
    Ok(Some(TspResult {
        order,
        headings,
        plan: PlanResult {
            waypoints,
            cost: best_total,
            total_time,
            solutions,
            diagnostics: Diagnostics::default(),
        },
        pose_pairs_solved: pairs,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidates::{enumerate_candidates, Variant};
    use crate::se2::VehicleLimits;

    fn dubins() -> CandidateSet {
        let limits = VehicleLimits::new(0.3, 1.0, 1.0).unwrap();
        enumerate_candidates(&limits, 1, Variant::Gmdm).unwrap()
    }

    #[test]
    fn three_points_four_headings_counts_120_pairs() {
        let points = [[2.0, 0.0], [3.0, 2.5], [0.0, 3.0]];
        let start = Pose::new(0.0, 0.0, 0.0);
        let result = solve_tsp(
            &points,
            4,
            &start,
            &dubins(),
            None,
            &RiskParams::standard(),
            0.05,
        )
        .unwrap()
        .unwrap();
        // 12 poses x 8 cross-point poses + 12 from start + 12 to start.
        assert_eq!(result.pose_pairs_solved, 120);
        assert_eq!(result.order.len(), 3);
        assert_eq!(result.plan.waypoints.len(), 5);
        assert!(result.plan.max_joint_error().unwrap() < 1e-9);
        // Every point visited exactly once.
        let mut sorted = result.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2]);
    }

    #[test]
    fn single_point_is_out_and_back() {
        let points = [[3.0, 0.0]];
        let start = Pose::new(0.0, 0.0, 0.0);
        let result = solve_tsp(
            &points,
            4,
            &start,
            &dubins(),
            None,
            &RiskParams::standard(),
            0.05,
        )
        .unwrap()
        .unwrap();
        assert_eq!(result.order, vec![0]);
        assert_eq!(result.plan.waypoints.len(), 3);
        assert_eq!(result.pose_pairs_solved, 8);
        // Exhaustive check over the four headings.
        let mut best = f64::INFINITY;
        for h in 0..4 {
            let p = Pose::new(3.0, 0.0, TWO_PI * h as f64 / 4.0);
            let params = RiskParams::standard();
            let out = best_path(&start, &p, &dubins(), None, &params, 0.05)
                .unwrap()
                .unwrap()
                .cost;
            let back = best_path(&p, &start, &dubins(), None, &params, 0.05)
                .unwrap()
                .unwrap()
                .cost;
            best = best.min(out + back);
        }
        assert!((result.plan.cost - best).abs() < 1e-12);
    }

    #[test]
    fn dp_matches_brute_force_permutations() {
        let points = [[2.0, 1.0], [4.0, -1.0], [1.0, -2.0]];
        let start = Pose::new(0.0, 0.0, 0.0);
        let set = dubins();
        let params = RiskParams::standard();
        let result = solve_tsp(&points, 2, &start, &set, None, &params, 0.05)
            .unwrap()
            .unwrap();

        // Brute force over all 3! orders and 2^3 heading choices.
        let pose_of =
            |i: usize, h: usize| Pose::new(points[i][0], points[i][1], TWO_PI * h as f64 / 2.0);
        let cost = |a: &Pose, b: &Pose| {
            best_path(a, b, &set, None, &params, 0.05)
                .unwrap()
                .unwrap()
                .cost
        };
        let mut best = f64::INFINITY;
        let orders = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for order in orders {
            for h0 in 0..2 {
                for h1 in 0..2 {
                    for h2 in 0..2 {
                        let hs = [h0, h1, h2];
                        let mut total = cost(&start, &pose_of(order[0], hs[0]));
                        total += cost(&pose_of(order[0], hs[0]), &pose_of(order[1], hs[1]));
                        total += cost(&pose_of(order[1], hs[1]), &pose_of(order[2], hs[2]));
                        total += cost(&pose_of(order[2], hs[2]), &start);
                        best = best.min(total);
                    }
                }
            }
        }
        assert!(
            (result.plan.cost - best).abs() < 1e-9,
            "dp {} vs brute {best}",
            result.plan.cost
        );
    }

    #[test]
    fn rejects_oversized_and_empty_instances() {
        let start = Pose::new(0.0, 0.0, 0.0);
        let params = RiskParams::standard();
        assert!(solve_tsp(&[], 4, &start, &dubins(), None, &params, 0.05).is_err());
        let many = [[0.0, 1.0]; 9];
        assert!(solve_tsp(&many, 4, &start, &dubins(), None, &params, 0.05).is_err());
        assert!(solve_tsp(&[[1.0, 1.0]], 0, &start, &dubins(), None, &params, 0.05).is_err());
    }
}
