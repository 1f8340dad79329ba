//! Seeded RRT*-style planning with full multi-speed connections.
//!
//! Runs the sampler at increasing iteration budgets under the same seed to
//! show the anytime behavior: the returned cost only improves. The final
//! plan is written as JSON plus a polyline CSV.
//!
//! Run with `cargo run --release --example rrt_plan`.

use gmdm::candidates::{enumerate_candidates, Variant};
use gmdm::env::{Aabb, Environment, Obstacle};
use gmdm::planner::{plan_rrt_star, RrtConfig};
use gmdm::se2::{Pose, VehicleLimits};

fn main() {
    let env = Environment::new(
        vec![
            Obstacle::circle([2.2, 1.2], 0.9).unwrap(),
            Obstacle::circle([3.8, -1.4], 1.0).unwrap(),
            Obstacle::circle([5.5, 1.0], 0.7).unwrap(),
        ],
        Some(Aabb::new([-1.0, -4.0], [8.0, 4.0]).unwrap()),
    )
    .unwrap();
    let limits = VehicleLimits::new(0.3, 1.0, 1.0).unwrap();
    let set = enumerate_candidates(&limits, 2, Variant::GmdmPrime).unwrap();
    let start = Pose::new(0.0, 0.0, 0.0);
    let goal = Pose::new(7.0, 0.0, 0.0);
    let seed = 9;

    println!("anytime behavior under seed {seed}:");
    let mut last = None;
    for budget in [100, 200, 400] {
        let t0 = std::time::Instant::now();
        let plan = plan_rrt_star(&env, &set, &start, &goal, &RrtConfig::new(budget, seed)).unwrap();
        match plan {
            Some(plan) => {
                println!(
                    "  {budget:>4} iterations: T = {:.3} s, {} tree nodes, {:.2} s wall",
                    plan.cost,
                    plan.diagnostics.tree_size,
                    t0.elapsed().as_secs_f64()
                );
                last = Some(plan);
            }
            None => println!("  {budget:>4} iterations: no plan yet"),
        }
    }

    let plan = last.expect("a plan was found");
    let out = std::path::Path::new("target/example-output/rrt");
    std::fs::create_dir_all(out).unwrap();
    std::fs::write(
        out.join("plan.json"),
        serde_json::to_string_pretty(&plan).unwrap(),
    )
    .unwrap();
    let mut csv = String::from("x,y,theta\n");
    for p in plan.polyline(0.05).unwrap() {
        csv.push_str(&format!("{},{},{}\n", p.x, p.y, p.theta));
    }
    std::fs::write(out.join("path.csv"), csv).unwrap();
    println!(
        "\nfinal plan: {} waypoints, max joint error {:.2e}; wrote {}",
        plan.waypoints.len(),
        plan.max_joint_error().unwrap(),
        out.display()
    );
}
