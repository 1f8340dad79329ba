//! Lookup-table lattice planning.
//!
//! The state space is a uniform grid with 8-connectivity and evenly spaced
//! headings. Because the model is translation-equivariant, the inverse
//! solutions for every (neighbor offset, heading-in, heading-out) triple
//! can be precomputed once from the origin and replayed from any cell;
//! search then pays only a table lookup plus obstacle-dependent cost
//! evaluation per edge.

use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::angle::TWO_PI;
use crate::candidates::CandidateSet;
use crate::cost::{path_cost, sample_path, RiskParams};
use crate::env::Environment;
use crate::error::{Error, Result};
use crate::se2::Pose;
use crate::solver::{solve_type, PathSolution};

use super::{Diagnostics, PlanResult};

/// The 8-connected neighbor offsets, in fixed order for determinism.
pub const NEIGHBOR_OFFSETS: [(i64, i64); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];

/// Grid discretization: square cells of `cell_size` meters and `headings`
/// evenly spaced orientations. Connectivity is the 8-neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub cell_size: f64,
    pub headings: usize,
}

impl GridSpec {
    pub fn new(cell_size: f64, headings: usize) -> Result<Self> {
        if cell_size <= 0.0 || cell_size.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "cell_size must be positive, got {cell_size}"
            )));
        }
        if headings < 4 {
            return Err(Error::InvalidArgument(format!(
                "need at least 4 headings, got {headings}"
            )));
        }
        Ok(Self {
            cell_size,
            headings,
        })
    }

    /// Paper-standard grid: 1 m cells, 8 headings at pi/4.
    pub fn standard() -> Self {
        Self {
            cell_size: 1.0,
            headings: 8,
        }
    }

    pub fn heading_angle(&self, h: usize) -> f64 {
        TWO_PI * h as f64 / self.headings as f64
    }

    /// Snap a pose to the nearest grid state (cell indices and heading index).
    pub fn snap(&self, pose: &Pose) -> (i64, i64, usize) {
        let ix = (pose.x / self.cell_size).round() as i64;
        let iy = (pose.y / self.cell_size).round() as i64;
        let h = (pose.theta / (TWO_PI / self.headings as f64)).round() as usize % self.headings;
        (ix, iy, h)
    }

    pub fn state_pose(&self, ix: i64, iy: i64, h: usize) -> Pose {
        Pose::new(
            ix as f64 * self.cell_size,
            iy as f64 * self.cell_size,
            self.heading_angle(h),
        )
    }
}

/// Precomputed inverse solutions for all (offset, heading-in, heading-out)
/// triples, solved from the origin. Entries with no feasible candidate are
/// empty and skipped by search.
#[derive(Debug, Clone)]
pub struct LookupTable {
    pub spec: GridSpec,
    /// Indexed `[offset][h_in][h_out]` flattened.
    entries: Vec<Vec<PathSolution>>,
}

impl LookupTable {
    fn index(&self, offset: usize, h_in: usize, h_out: usize) -> usize {
        (offset * self.spec.headings + h_in) * self.spec.headings + h_out
    }

    pub fn get(&self, offset: usize, h_in: usize, h_out: usize) -> &[PathSolution] {
        &self.entries[self.index(offset, h_in, h_out)]
    }

    pub fn key_count(&self) -> usize {
        self.entries.len()
    }
}

/// Solve every (offset, heading-in, heading-out) triple for every candidate.
/// The obstacle-independent geometry is computed once; search translates it
/// into place.
pub fn build_lookup_table(spec: &GridSpec, candidates: &CandidateSet) -> Result<LookupTable> {
    let h = spec.headings;
    let mut entries = Vec::with_capacity(NEIGHBOR_OFFSETS.len() * h * h);
    for (dx, dy) in NEIGHBOR_OFFSETS {
        for h_in in 0..h {
            for h_out in 0..h {
                let p0 = spec.state_pose(0, 0, h_in);
                let pf = spec.state_pose(dx, dy, h_out);
                let mut sols = Vec::new();
                for cand in &candidates.entries {
                    if let Some(sol) = solve_type(&p0, &pf, &cand.controls, cand.path_type)? {
                        sols.push(sol);
                    }
                }
                entries.push(sols);
            }
        }
    }
    Ok(LookupTable {
        spec: *spec,
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct HeapEntry {
    f: f64,
    seq: u64,
    state: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Min-heap by f, FIFO tie-break for determinism.
        other
            .f
            .total_cmp(&self.f)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

struct GridIndex {
    min_ix: i64,
    min_iy: i64,
    nx: i64,
    ny: i64,
    headings: usize,
}

impl GridIndex {
    fn contains(&self, ix: i64, iy: i64) -> bool {
        ix >= self.min_ix
            && ix < self.min_ix + self.nx
            && iy >= self.min_iy
            && iy < self.min_iy + self.ny
    }

    fn flatten(&self, ix: i64, iy: i64, h: usize) -> usize {
        (((iy - self.min_iy) * self.nx + (ix - self.min_ix)) as usize) * self.headings + h
    }

    fn unflatten(&self, s: usize) -> (i64, i64, usize) {
        let h = s % self.headings;
        let cell = s / self.headings;
        let ix = self.min_ix + (cell as i64 % self.nx);
        let iy = self.min_iy + (cell as i64 / self.nx);
        (ix, iy, h)
    }

    fn len(&self) -> usize {
        (self.nx * self.ny) as usize * self.headings
    }
}

/// A* over (cell, heading) states using a prebuilt lookup table.
///
/// Edge costs are the time-risk functional evaluated on the table path
/// translated into place (infinite on collision); the heuristic is
/// Euclidean distance over `v_max`, which lower-bounds travel time and
/// stays admissible for any `lambda >= 0` because risk never drops
/// below one. The environment must carry bounds; they limit the search
/// extent.
pub fn plan_grid_with_table(
    env: &Environment,
    table: &LookupTable,
    start: &Pose,
    goal: &Pose,
    params: &RiskParams,
    ds_max: f64,
) -> Result<Option<PlanResult>> {
    let t0 = std::time::Instant::now();
    let spec = &table.spec;
    let bounds = env.bounds.ok_or_else(|| {
        Error::InvalidArgument("grid planning requires environment bounds".into())
    })?;
    let v_max = table
        .entries
        .iter()
        .flatten()
        .flat_map(|s| s.segments.iter())
        .map(|s| s.input.v)
        .fold(0.0_f64, f64::max);
    if v_max <= 0.0 {
        return Ok(None); // empty table
    }

    let index = GridIndex {
        min_ix: (bounds.min[0] / spec.cell_size).ceil() as i64,
        min_iy: (bounds.min[1] / spec.cell_size).ceil() as i64,
        nx: (bounds.max[0] / spec.cell_size).floor() as i64
            - (bounds.min[0] / spec.cell_size).ceil() as i64
            + 1,
        ny: (bounds.max[1] / spec.cell_size).floor() as i64
            - (bounds.min[1] / spec.cell_size).ceil() as i64
            + 1,
        headings: spec.headings,
    };
    if index.nx <= 0 || index.ny <= 0 {
        return Ok(None);
    }

    let (sx, sy, sh) = spec.snap(start);
    let (gx, gy, gh) = spec.snap(goal);
    if !index.contains(sx, sy) || !index.contains(gx, gy) {
        return Ok(None);
    }
    let start_state = index.flatten(sx, sy, sh);
    let goal_state = index.flatten(gx, gy, gh);
    if start_state == goal_state {
        let mut plan = PlanResult::empty(spec.state_pose(sx, sy, sh));
        plan.diagnostics.wall_time_s = t0.elapsed().as_secs_f64();
        return Ok(Some(plan));
    }

    let heuristic = |s: usize| -> f64 {
        let (ix, iy, _) = index.unflatten(s);
        let dx = (ix - gx) as f64 * spec.cell_size;
        let dy = (iy - gy) as f64 * spec.cell_size;
        dx.hypot(dy) / v_max
    };

    let n = index.len();
    let mut g = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<(usize, PathSolution)>> = vec![None; n];
    let mut closed = vec![false; n];
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    g[start_state] = 0.0;
    heap.push(HeapEntry {
        f: heuristic(start_state),
        seq,
        state: start_state,
    });

    let mut expanded = 0usize;
    let mut closed_count = 0usize;
    while let Some(entry) = heap.pop() {
        let s = entry.state;
        if closed[s] {
            continue;
        }
        closed[s] = true;
        closed_count += 1;
        if s == goal_state {
            break;
        }
        expanded += 1;
        let (ix, iy, h_in) = index.unflatten(s);
        let from_pose = spec.state_pose(ix, iy, h_in);
        for (oi, (dx, dy)) in NEIGHBOR_OFFSETS.iter().enumerate() {
            let (nx_, ny_) = (ix + dx, iy + dy);
            if !index.contains(nx_, ny_) {
                continue;
            }
            for h_out in 0..spec.headings {
                let t = index.flatten(nx_, ny_, h_out);
                if closed[t] {
                    continue;
                }
                let mut best_edge: Option<(f64, &PathSolution)> = None;
                for sol in table.get(oi, h_in, h_out) {
                    let sampled = sample_path(&from_pose, sol, ds_max)?;
                    let j = path_cost(env, &sampled, params);
                    if j.is_finite() && best_edge.is_none_or(|(c, _)| j < c) {
                        best_edge = Some((j, sol));
                    }
                }
                let Some((edge_cost, sol)) = best_edge else {
                    continue;
                };
                let cand = g[s] + edge_cost;
                if cand < g[t] {
                    g[t] = cand;
                    parent[t] = Some((s, sol.clone()));
                    seq += 1;
                    heap.push(HeapEntry {
                        f: cand + heuristic(t),
                        seq,
                        state: t,
                    });
                }
            }
        }
    }

    if !g[goal_state].is_finite() {
        return Ok(None);
    }

    // Reconstruct the chain.
    let mut states = vec![goal_state];
    let mut solutions_rev = Vec::new();
    let mut cur = goal_state;
    while cur != start_state {
        let (prev, sol) = parent[cur].clone().expect("reached state has a parent");
        solutions_rev.push(sol);
        states.push(prev);
        cur = prev;
    }
    states.reverse();
    solutions_rev.reverse();
    let waypoints: Vec<Pose> = states
        .iter()
        .map(|&s| {
            let (ix, iy, h) = index.unflatten(s);
            spec.state_pose(ix, iy, h)
        })
        .collect();
    let total_time = solutions_rev.iter().map(|s| s.total_time).sum();
    Ok(Some(PlanResult {
        waypoints,
        cost: g[goal_state],
        total_time,
        solutions: solutions_rev,
        diagnostics: Diagnostics {
            nodes_expanded: expanded,
            tree_size: closed_count,
            wall_time_s: t0.elapsed().as_secs_f64(),
        },
    }))
}

/// Build the lookup table for `candidates` and run the grid search.
pub fn plan_grid(
    env: &Environment,
    spec: &GridSpec,
    start: &Pose,
    goal: &Pose,
    candidates: &CandidateSet,
    params: &RiskParams,
    ds_max: f64,
) -> Result<Option<PlanResult>> {
    let table = build_lookup_table(spec, candidates)?;
    plan_grid_with_table(env, &table, start, goal, params, ds_max)
}
