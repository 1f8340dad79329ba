//! RRT*-style sampling planner with full multi-speed Dubins connections.
//!
//! Poses are sampled uniformly over the environment bounds (with a small
//! goal bias), connected to the tree by the best feasible candidate path
//! under travel-time cost, and rewired inside a fixed neighbor radius. The
//! planner is anytime: it keeps the cheapest goal-reaching plan found so
//! far, and a fixed seed reproduces the tree exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::TWO_PI;
use crate::candidates::CandidateSet;
use crate::cost::RiskParams;
use crate::env::Environment;
use crate::error::{Error, Result};
use crate::se2::Pose;

use super::{best_path, Diagnostics, PlanResult, DEFAULT_DS_MAX};

/// RRT* settings. `max_nodes` bounds the number of sampling iterations;
/// `max_seconds`, when set, additionally stops the loop on wall time (at
/// the expense of reproducibility).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RrtConfig {
    pub max_nodes: usize,
    pub max_seconds: Option<f64>,
    pub goal_bias: f64,
    pub neighbor_radius: f64,
    pub seed: u64,
    pub ds_max: f64,
}

impl RrtConfig {
    pub fn new(max_nodes: usize, seed: u64) -> Self {
        Self {
            max_nodes,
            max_seconds: None,
            goal_bias: 0.05,
            neighbor_radius: 2.5,
            seed,
            ds_max: DEFAULT_DS_MAX,
        }
    }
}

struct Node {
    pose: Pose,
    parent: Option<usize>,
    edge: Option<crate::solver::PathSolution>,
    cost: f64,
    children: Vec<usize>,
}

struct Tree {
    nodes: Vec<Node>,
}

impl Tree {
    fn update_subtree_costs(&mut self, root: usize, delta: f64) {
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            self.nodes[i].cost += delta;
            stack.extend(self.nodes[i].children.iter().copied());
        }
    }

    fn reparent(&mut self, child: usize, new_parent: usize, edge: crate::solver::PathSolution) {
        let new_cost = self.nodes[new_parent].cost + edge.total_time;
        let delta = new_cost - self.nodes[child].cost;
        if let Some(old) = self.nodes[child].parent {
            let pos = self.nodes[old].children.iter().position(|&c| c == child);
            if let Some(pos) = pos {
                self.nodes[old].children.remove(pos);
            }
        }
        self.nodes[child].parent = Some(new_parent);
        self.nodes[child].edge = Some(edge);
        self.nodes[new_parent].children.push(child);
        self.update_subtree_costs(child, delta);
    }
}

/// Run the sampling planner. Travel time is the edge cost; candidate paths
/// are collision-checked at `config.ds_max`. Returns the best plan reaching
/// the goal pose within the budget, or `None`.
pub fn plan_rrt_star(
    env: &Environment,
    candidates: &CandidateSet,
    start: &Pose,
    goal: &Pose,
    config: &RrtConfig,
) -> Result<Option<PlanResult>> {
    if config.max_nodes == 0 {
        return Err(Error::InvalidArgument("max_nodes must be positive".into()));
    }
    let bounds = env.bounds.ok_or_else(|| {
        Error::InvalidArgument("RRT* requires environment bounds for sampling".into())
    })?;
    if env.point_in_collision(start.x, start.y) || env.point_in_collision(goal.x, goal.y) {
        return Ok(None);
    }
    let t0 = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let time_params = RiskParams::new(1.0, 0.0).expect("valid params");

    let mut tree = Tree {
        nodes: vec![Node {
            pose: *start,
            parent: None,
            edge: None,
            cost: 0.0,
            children: Vec::new(),
        }],
    };
    let mut goal_node: Option<usize> = None;
    let mut iterations = 0usize;

    let connect = |from: &Pose, to: &Pose| -> Result<Option<crate::solver::PathSolution>> {
        Ok(
            best_path(from, to, candidates, Some(env), &time_params, config.ds_max)?
                .map(|b| b.solution),
        )
    };

    while tree.nodes.len() < config.max_nodes {
        if let Some(limit) = config.max_seconds {
            if t0.elapsed().as_secs_f64() > limit {
                break;
            }
        }
        iterations += 1;
        if iterations > config.max_nodes.saturating_mul(50) {
            break; // sampling is stuck (e.g. heavily blocked space)
        }

        let sample = if rng.gen::<f64>() < config.goal_bias {
            *goal
        } else {
            let x = rng.gen_range(bounds.min[0]..bounds.max[0]);
            let y = rng.gen_range(bounds.min[1]..bounds.max[1]);
            let theta = rng.gen_range(0.0..TWO_PI);
            Pose::new(x, y, theta)
        };
        if env.point_in_collision(sample.x, sample.y) {
            continue;
        }
        let is_goal_sample =
            sample.position_distance(goal) < 1e-12 && sample.heading_distance(goal) < 1e-12;
        let existing = if is_goal_sample { goal_node } else { None };

        // Candidate parents: all nodes within the neighbor radius, plus the
        // nearest node as a fallback. A node never parents itself.
        let skip = |i: usize| Some(i) == existing;
        let nearest = (0..tree.nodes.len())
            .filter(|&i| !skip(i))
            .min_by(|&a, &b| {
                tree.nodes[a]
                    .pose
                    .position_distance(&sample)
                    .total_cmp(&tree.nodes[b].pose.position_distance(&sample))
                    .then(a.cmp(&b))
            })
            .expect("tree is nonempty");
        let mut parents: Vec<usize> = (0..tree.nodes.len())
            .filter(|&i| {
                !skip(i) && tree.nodes[i].pose.position_distance(&sample) <= config.neighbor_radius
            })
            .collect();
        if !parents.contains(&nearest) {
            parents.push(nearest);
        }

        let mut best: Option<(usize, crate::solver::PathSolution)> = None;
        for &i in &parents {
            if let Some(sol) = connect(&tree.nodes[i].pose, &sample)? {
                let c = tree.nodes[i].cost + sol.total_time;
                if best
                    .as_ref()
                    .is_none_or(|(bi, bs)| c < tree.nodes[*bi].cost + bs.total_time)
                {
                    best = Some((i, sol));
                }
            }
        }
        let Some((parent, edge)) = best else {
            continue;
        };
        let new_index = match existing {
            // Re-sampling a tree vertex re-runs parent choice for it.
            Some(i) => {
                let through = tree.nodes[parent].cost + edge.total_time;
                if through + 1e-12 < tree.nodes[i].cost {
                    tree.reparent(i, parent, edge);
                }
                i
            }
            None => {
                let i = tree.nodes.len();
                let new_cost = tree.nodes[parent].cost + edge.total_time;
                tree.nodes.push(Node {
                    pose: sample,
                    parent: Some(parent),
                    edge: Some(edge),
                    cost: new_cost,
                    children: Vec::new(),
                });
                tree.nodes[parent].children.push(i);
                if is_goal_sample {
                    goal_node = Some(i);
                }
                i
            }
        };
        let new_cost = tree.nodes[new_index].cost;
        let sample = tree.nodes[new_index].pose;

        // Rewire neighbors through the new node when that is cheaper. The
        // strict cost improvement with nonnegative leg times means an
        // ancestor of the new node can never be rewired, so no cycles.
        let neighbors: Vec<usize> = (0..tree.nodes.len())
            .filter(|&i| {
                i != new_index
                    && i != parent
                    && tree.nodes[i].pose.position_distance(&sample) <= config.neighbor_radius
            })
            .collect();
        for i in neighbors {
            if let Some(sol) = connect(&sample, &tree.nodes[i].pose)? {
                let through = new_cost + sol.total_time;
                if through + 1e-12 < tree.nodes[i].cost {
                    tree.reparent(i, new_index, sol);
                }
            }
        }

        // Try to reach the goal from the new node when it is close enough.
        if !is_goal_sample && sample.position_distance(goal) <= config.neighbor_radius {
            if let Some(sol) = connect(&sample, goal)? {
                let through = new_cost + sol.total_time;
                match goal_node {
                    None => {
                        let gi = tree.nodes.len();
                        tree.nodes.push(Node {
                            pose: *goal,
                            parent: Some(new_index),
                            edge: Some(sol),
                            cost: through,
                            children: Vec::new(),
                        });
                        tree.nodes[new_index].children.push(gi);
                        goal_node = Some(gi);
                    }
                    Some(gi) => {
                        if through + 1e-12 < tree.nodes[gi].cost {
                            tree.reparent(gi, new_index, sol);
                        }
                    }
                }
            }
        }
    }

    let Some(gi) = goal_node else {
        return Ok(None);
    };

    let mut chain = Vec::new();
    let mut cur = gi;
    loop {
        chain.push(cur);
        match tree.nodes[cur].parent {
            Some(p) => cur = p,
            None => break,
        }
    }
    chain.reverse();
    let waypoints: Vec<Pose> = chain.iter().map(|&i| tree.nodes[i].pose).collect();
    let solutions: Vec<crate::solver::PathSolution> = chain[1..]
        .iter()
        .map(|&i| {
            tree.nodes[i]
                .edge
                .clone()
                .expect("non-root node has an edge")
        })
        .collect();
    let total_time: f64 = solutions.iter().map(|s| s.total_time).sum();
    Ok(Some(PlanResult {
        waypoints,
        cost: tree.nodes[gi].cost,
        total_time,
        solutions,
        diagnostics: Diagnostics {
            nodes_expanded: iterations,
            tree_size: tree.nodes.len(),
            wall_time_s: t0.elapsed().as_secs_f64(),
        },
    }))
}
