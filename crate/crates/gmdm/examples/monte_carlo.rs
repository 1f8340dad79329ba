//! Seeded Monte-Carlo comparison of candidate families.
//!
//! Draws goal poses uniformly over a 3 m disk with random headings and
//! solves each goal with every model on identical goals. Writes the raw
//! travel times and summary to `target/example-output/monte-carlo/`.
//!
//! Run with `cargo run --release --example monte_carlo`.

use gmdm::bench::{run_montecarlo, BenchmarkSpec, ModelSpec};
use gmdm::se2::VehicleLimits;

fn main() {
    let spec = BenchmarkSpec {
        trials: 2000,
        disk_radius: 3.0,
        models: vec![
            ModelSpec::parse("dubins").unwrap(),
            ModelSpec::parse("gmdm-prime-2").unwrap(),
            ModelSpec::parse("gmdm-prime-3").unwrap(),
            ModelSpec::parse("gmdm-2").unwrap(),
        ],
        seed: 2024,
        vehicle: VehicleLimits::new(0.3, 1.0, 1.0).unwrap(),
    };
    let report = run_montecarlo(&spec).unwrap();
    println!(
        "{} goals over a {} m disk, seed {}\n",
        spec.trials, spec.disk_radius, spec.seed
    );
    println!(
        "{:>14} {:>8} {:>8} {:>8} {:>12}",
        "model", "median", "q1", "q3", "mean solve"
    );
    for m in &report.models {
        println!(
            "{:>14} {:>7.3}s {:>7.3}s {:>7.3}s {:>11.2e}s",
            m.name, m.summary.median, m.summary.q1, m.summary.q3, m.mean_solve_time
        );
    }
    let out = std::path::Path::new("target/example-output/monte-carlo");
    report.write_to(out).unwrap();
    println!(
        "\nwrote report.json, travel_times.csv, solve_times.csv to {}",
        out.display()
    );
}
