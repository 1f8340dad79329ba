//! Sample reachable-set slices and export them as CSV and PGM.
//!
//! Uses the speed set (0.1, 0.5, 1.0) m/s with |omega| = 1 rad/s, so the
//! first and last turn radii are 0.1 m and 1.0 m. The LSR slice shows the
//! excluded disk of radius |r31| = 1.1 m; the LRL slice shows the reachable
//! annulus; the LSL/RSR union demonstrates full coverage.
//!
//! Run with `cargo run --release --example reachability_slice`.

use gmdm::env::Aabb;
use gmdm::reach::{ccc_reachable, csc_reachable, full_reach_holds, sample_reach_slice};
use gmdm::se2::Pose;

fn main() {
    let out = std::path::Path::new("target/example-output/reachability");
    std::fs::create_dir_all(out).unwrap();
    let p0 = Pose::new(0.0, 0.0, 0.0);
    let theta_f = 0.0;
    let window = Aabb::centered(0.0, 0.0, 6.0, 6.0).unwrap();
    let spacing = 0.02;

    // LSR: r1 = +0.1, r3 = -1.0.
    let slice = sample_reach_slice(
        theta_f,
        |pf| csc_reachable(&p0, pf, 0.1, -1.0),
        &window,
        spacing,
    )
    .unwrap();
    report("LSR", &slice);
    slice.write_csv(&out.join("lsr.csv")).unwrap();
    slice.write_pgm(&out.join("lsr.pgm")).unwrap();

    // LRL: r1 = +0.1, r2 = -0.5, r3 = +1.0.
    let slice = sample_reach_slice(
        theta_f,
        |pf| ccc_reachable(&p0, pf, 0.1, -0.5, 1.0),
        &window,
        spacing,
    )
    .unwrap();
    report("LRL", &slice);
    slice.write_csv(&out.join("lrl.csv")).unwrap();
    slice.write_pgm(&out.join("lrl.pgm")).unwrap();

    // LSL union RSR: everything is reachable.
    let slice = sample_reach_slice(
        theta_f,
        |pf| full_reach_holds(&p0, pf, 0.1, 1.0),
        &window,
        spacing,
    )
    .unwrap();
    report("LSL u RSR", &slice);

    println!("\nwrote CSV/PGM slices to {}", out.display());
}

fn report(label: &str, slice: &gmdm::reach::ReachSlice) {
    let reachable = slice.cells.iter().filter(|&&c| c).count();
    println!(
        "{label:>9}: {}x{} cells, {:.1}% reachable",
        slice.nx,
        slice.ny,
        100.0 * reachable as f64 / slice.cells.len() as f64
    );
}
