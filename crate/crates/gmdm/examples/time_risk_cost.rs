//! Evaluate the time-risk functional along one path for several risk
//! weights.
//!
//! The vehicle drives toward a wall and turns away at the last moment.
//! Sweeping the risk weight shows how the same geometry becomes more
//! expensive as risk matters more, and how slowing down suppresses the
//! risk term entirely.
//!
//! Run with `cargo run --release --example time_risk_cost`.

use gmdm::cost::{path_cost, risk_at, sample_path, RiskParams};
use gmdm::env::{Environment, Obstacle};
use gmdm::se2::{ControlInput, Pose};
use gmdm::solver::{forward_csc, PathSolution, PathType, SegmentSpec};

fn straight_then_turn(v_straight: f64, v_turn: f64) -> (Pose, PathSolution) {
    let p0 = Pose::new(0.0, 0.0, 0.0);
    let run = ControlInput::new(v_straight, 0.0);
    let turn = ControlInput::new(v_turn, 1.0);
    let specs = [
        SegmentSpec::new(ControlInput::new(v_turn, 1.0), 0.0),
        SegmentSpec::new(run, 6.0 / v_straight),
        SegmentSpec::new(turn, std::f64::consts::FRAC_PI_2),
    ];
    let pf = forward_csc(&p0, &specs).unwrap();
    let sol = PathSolution {
        path_type: PathType::Lsl,
        segments: specs,
        total_time: specs.iter().map(|s| s.tau).sum(),
        p1: p0,
        p2: Pose::new(6.0, 0.0, 0.0),
    };
    println!(
        "  path: 6 m straight at {v_straight} m/s, quarter turn at {v_turn} m/s, ends at ({:.2}, {:.2})",
        pf.x, pf.y
    );
    (p0, sol)
}

fn main() {
    // A wall 8 m ahead of the start.
    let wall = Obstacle::polygon(vec![[8.0, -2.0], [9.0, -2.0], [9.0, 4.0], [8.0, 4.0]]).unwrap();
    let env = Environment::new(vec![wall], None).unwrap();

    println!("fast approach:");
    let (p0, fast) = straight_then_turn(1.0, 1.0);
    println!("slow approach:");
    let (_, slow) = straight_then_turn(0.3, 0.3);

    println!("\n{:>8} {:>12} {:>12}", "lambda", "J(fast)", "J(slow)");
    for lambda in [0.0, 0.5, 1.0, 2.0, 4.0, 6.0] {
        let params = RiskParams::new(3.0, lambda).unwrap();
        let j_fast = path_cost(&env, &sample_path(&p0, &fast, 0.05).unwrap(), &params);
        let j_slow = path_cost(&env, &sample_path(&p0, &slow, 0.05).unwrap(), &params);
        println!("{lambda:>8.1} {j_fast:>12.4} {j_slow:>12.4}");
    }

    // Pointwise risk profile of the fast path.
    let sampled = sample_path(&p0, &fast, 0.05).unwrap();
    let params = RiskParams::standard();
    let peak = sampled
        .samples
        .iter()
        .map(|s| risk_at(&env, &s.pose, s.v, &params).risk)
        .fold(0.0f64, f64::max);
    println!(
        "\npeak pointwise risk on the fast path: {peak:.3} (t* = {} s, natural log)",
        params.t_star
    );
    println!("the slow path never drops below the risk-free threshold, so its risk stays 1");
}
