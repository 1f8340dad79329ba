//! Solve one pose pair with every candidate family and compare.
//!
//! Prints the per-word solutions for the classic single-speed set, then the
//! best multi-speed path for growing speed counts. The goal used here is
//! the "reversing" case where multi-speed shines: slow sharp turns stop the
//! vehicle from looping wide.
//!
//! Run with `cargo run --release --example solve_pose_pair`.

use gmdm::candidates::{enumerate_candidates, Variant};
use gmdm::cost::RiskParams;
use gmdm::planner::{best_path, DEFAULT_DS_MAX};
use gmdm::se2::{Pose, VehicleLimits};
use gmdm::solver::{controls_for, solve_type, PathType};

fn main() {
    let limits = VehicleLimits::new(0.3, 1.0, 1.0).unwrap();
    let start = Pose::new(0.0, 0.0, 0.0);
    let goal = Pose::new(1.5, 0.0, 3.0 * std::f64::consts::FRAC_PI_4);
    println!(
        "start ({:.2}, {:.2}, {:.2}), goal ({:.2}, {:.2}, {:.2})\n",
        start.x, start.y, start.theta, goal.x, goal.y, goal.theta
    );

    println!("single-speed words at v = {} m/s:", limits.v_max);
    for word in PathType::ALL {
        let controls = controls_for(word, [limits.v_max; 3], limits.omega_max);
        match solve_type(&start, &goal, &controls, word).unwrap() {
            Some(sol) => println!(
                "  {word}: T = {:.3} s  (tau = {:.3}, {:.3}, {:.3})",
                sol.total_time, sol.segments[0].tau, sol.segments[1].tau, sol.segments[2].tau
            ),
            None => println!("  {word}: no solution"),
        }
    }

    let params = RiskParams::new(3.0, 0.0).unwrap();
    println!("\nbest path by candidate family:");
    for (label, variant, k) in [
        ("dubins        ", Variant::GmdmPrime, 1),
        ("gmdm-prime-2  ", Variant::GmdmPrime, 2),
        ("gmdm-prime-3  ", Variant::GmdmPrime, 3),
        ("gmdm-2 (full) ", Variant::Gmdm, 2),
    ] {
        let set = enumerate_candidates(&limits, k, variant).unwrap();
        let best = best_path(&start, &goal, &set, None, &params, DEFAULT_DS_MAX)
            .unwrap()
            .expect("full reachability in an empty workspace");
        let speeds: Vec<String> = best
            .solution
            .segments
            .iter()
            .map(|s| format!("{:.2}", s.input.v))
            .collect();
        println!(
            "  {label} ({:3} candidates): {} in {:.3} s, speeds [{}]",
            set.len(),
            best.solution.path_type,
            best.solution.total_time,
            speeds.join(", ")
        );
    }
}
