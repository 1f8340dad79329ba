//! Lookup-table lattice planning through an L-shaped corridor.
//!
//! Builds the (offset, heading-in, heading-out) solution table once, then
//! runs A* twice: once for pure travel time and once with the risk weight
//! the time-risk functional uses by default. The risk-aware plan slows
//! down near walls and pays some travel time for a much lower peak risk.
//!
//! Run with `cargo run --release --example grid_plan`.

use gmdm::candidates::{enumerate_candidates, Variant};
use gmdm::cost::{risk_at, sample_path, RiskParams};
use gmdm::env::{Aabb, Environment, Obstacle};
use gmdm::planner::{build_lookup_table, plan_grid_with_table, GridSpec, PlanResult};
use gmdm::se2::{Pose, VehicleLimits};

fn peak_risk(env: &Environment, plan: &PlanResult, params: &RiskParams) -> f64 {
    let mut worst = 0.0f64;
    for (i, sol) in plan.solutions.iter().enumerate() {
        let sampled = sample_path(&plan.waypoints[i], sol, 0.05).unwrap();
        for s in &sampled.samples {
            worst = worst.max(risk_at(env, &s.pose, s.v, params).risk);
        }
    }
    worst
}

fn main() {
    // Corridor: east along the bottom, then north up the right side.
    let block = Obstacle::polygon(vec![[-0.5, 1.6], [4.4, 1.6], [4.4, 6.5], [-0.5, 6.5]]).unwrap();
    let env = Environment::new(
        vec![block],
        Some(Aabb::new([-0.5, -0.5], [6.5, 6.5]).unwrap()),
    )
    .unwrap();
    let limits = VehicleLimits::new(0.3, 1.0, 1.0).unwrap();
    let set = enumerate_candidates(&limits, 3, Variant::Gmdm).unwrap();
    let spec = GridSpec::standard();

    let t0 = std::time::Instant::now();
    let table = build_lookup_table(&spec, &set).unwrap();
    println!(
        "lookup table: {} keys from {} candidates in {:.2} s",
        table.key_count(),
        set.len(),
        t0.elapsed().as_secs_f64()
    );

    let start = Pose::new(0.0, 0.0, 0.0);
    let goal = Pose::new(6.0, 6.0, std::f64::consts::FRAC_PI_2);
    let risk_params = RiskParams::standard();

    for (label, lambda) in [("time-optimal  ", 0.0), ("time-risk     ", 2.0)] {
        let params = RiskParams::new(3.0, lambda).unwrap();
        let plan = plan_grid_with_table(&env, &table, &start, &goal, &params, 0.05)
            .unwrap()
            .expect("corridor is traversable");
        println!(
            "{label} (lambda = {lambda}): J = {:.3}, T = {:.3} s, {} legs, \
             peak risk {:.3}, {} expansions",
            plan.cost,
            plan.total_time,
            plan.solutions.len(),
            peak_risk(&env, &plan, &risk_params),
            plan.diagnostics.nodes_expanded
        );
    }
}
