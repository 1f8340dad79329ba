//! End-to-end checks of the `gmdm` binary: exit codes, output formats,
//! and byte-level determinism of the written artifacts.

use std::path::Path;
use std::process::{Command, Output};

fn gmdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmdm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_scenario(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn solve_prints_dubins_json() {
    let out = gmdm(&["solve", "--start", "0,0,0", "--goal", "4,0,0", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["segments"].as_array().unwrap().len(), 3);
    assert!((v["total_time"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert!((v["cost"].as_f64().unwrap() - 4.0).abs() < 1e-9);
}

#[test]
fn solve_single_word_restriction_can_fail_with_exit_2() {
    // A far-away goal is out of range for any CCC word.
    let out = gmdm(&[
        "solve", "--start", "0,0,0", "--goal", "40,0,0", "--word", "LRL",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_1() {
    let out = gmdm(&["solve", "--start", "0,0", "--goal", "1,1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let out = gmdm(&[
        "plan",
        "--scenario",
        "/nonexistent.json",
        "--planner",
        "grid",
        "--out",
        "/tmp/x",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = gmdm(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = gmdm(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn fig7_right_of_start_times() {
    // Reconstructed right-of-start goal pose: 1.5 m ahead, heading 3*pi/4.
    let goal = "1.5,0,2.356194490192345";
    let dubins = gmdm(&["solve", "--start", "0,0,0", "--goal", goal, "--k", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&dubins.stdout).unwrap();
    let t_dubins = v["total_time"].as_f64().unwrap();
    let prime2 = gmdm(&["solve", "--start", "0,0,0", "--goal", goal, "--k", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&prime2.stdout).unwrap();
    let t_prime2 = v["total_time"].as_f64().unwrap();
    assert!((t_dubins - 6.70).abs() / 6.70 < 0.05, "dubins {t_dubins}");
    assert!(
        (t_prime2 - 4.09).abs() / 4.09 < 0.05,
        "gmdm-prime-2 {t_prime2}"
    );
}

#[test]
fn reach_writes_deterministic_slice_files() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a");
    let out2 = dir.path().join("b");
    for out in [&out1, &out2] {
        let run = gmdm(&[
            "reach",
            "--word",
            "lsr",
            "--theta-f",
            "0",
            "--speeds",
            "0.1,0.5,1.0",
            "--spacing",
            "0.1",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(run.status.code(), Some(0));
    }
    let csv1 = std::fs::read(out1.join("reach_lsr.csv")).unwrap();
    let csv2 = std::fs::read(out2.join("reach_lsr.csv")).unwrap();
    assert_eq!(csv1, csv2);
    let pgm1 = std::fs::read(out1.join("reach_lsr.pgm")).unwrap();
    let pgm2 = std::fs::read(out2.join("reach_lsr.pgm")).unwrap();
    assert_eq!(pgm1, pgm2);
    assert!(pgm1.starts_with(b"P5"));

    // The LSR slice excludes a disk of radius |r31| = 1.1: both outcomes
    // appear in the CSV.
    let text = String::from_utf8(csv1).unwrap();
    let zeros = text.lines().filter(|l| l.ends_with(",0")).count();
    let ones = text.lines().filter(|l| l.ends_with(",1")).count();
    assert!(zeros > 100, "{zeros} unreachable cells");
    assert!(ones > 2000, "{ones} reachable cells");
}

#[test]
fn montecarlo_report_is_deterministic_and_recomputable() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("m1");
    let out2 = dir.path().join("m2");
    for out in [&out1, &out2] {
        let run = gmdm(&[
            "montecarlo",
            "--trials",
            "200",
            "--models",
            "dubins,gmdm-prime-2",
            "--seed",
            "7",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(
            run.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&run.stderr)
        );
    }
    let raw1 = std::fs::read(out1.join("travel_times.csv")).unwrap();
    let raw2 = std::fs::read(out2.join("travel_times.csv")).unwrap();
    assert_eq!(raw1, raw2);
    let rep1 = std::fs::read(out1.join("report.json")).unwrap();
    let rep2 = std::fs::read(out2.join("report.json")).unwrap();
    assert_eq!(rep1, rep2);

    // Recompute the medians from the raw CSV and compare to the summary.
    let text = String::from_utf8(raw1).unwrap();
    let mut dubins_times = Vec::new();
    let mut prime_times = Vec::new();
    for line in text.lines().skip(1) {
        let parts: Vec<&str> = line.split(',').collect();
        let t: f64 = parts[2].parse().unwrap();
        match parts[1] {
            "dubins" => dubins_times.push(t),
            "gmdm-prime-2" => prime_times.push(t),
            other => panic!("unexpected model {other}"),
        }
    }
    assert_eq!(dubins_times.len(), 200);
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out1.join("report.json")).unwrap()).unwrap();
    let median = |mut v: Vec<f64>| -> f64 {
        v.sort_by(f64::total_cmp);
        let n = v.len();
        if n % 2 == 1 {
            v[n / 2]
        } else {
            0.5 * (v[n / 2 - 1] + v[n / 2])
        }
    };
    let d_med = median(dubins_times);
    let p_med = median(prime_times);
    assert!((report["models"][0]["summary"]["median"].as_f64().unwrap() - d_med).abs() < 1e-12);
    assert!((report["models"][1]["summary"]["median"].as_f64().unwrap() - p_med).abs() < 1e-12);
    assert!(p_med < d_med);
}

#[test]
fn plan_grid_and_rrt_roundtrip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "corridor.json",
        r#"{
            "vehicle": {"v_min": 0.3, "v_max": 1.0, "omega_max": 1.0},
            "risk": {"t_star": 3.0, "lambda": 2.0},
            "obstacles": [{"circle": {"center": [2.5, 0.0], "radius": 0.9}}],
            "bounds": {"min": [-1.4, -3.4], "max": [5.4, 3.4]},
            "start": [0.0, 0.0, 0.0],
            "goal": [5.0, 0.0, 0.0]
        }"#,
    );

    let grid_out = dir.path().join("grid");
    let run = gmdm(&[
        "plan",
        "--scenario",
        &scenario,
        "--planner",
        "grid",
        "--k",
        "2",
        "--out",
        grid_out.to_str().unwrap(),
    ]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let plan: serde_json::Value =
        serde_json::from_slice(&std::fs::read(grid_out.join("plan.json")).unwrap()).unwrap();
    assert!(plan["cost"].as_f64().unwrap() > 0.0);
    assert!(plan["waypoints"].as_array().unwrap().len() >= 2);
    let polyline = std::fs::read_to_string(grid_out.join("path.csv")).unwrap();
    assert!(polyline.lines().count() > 10);

    // RRT* with a fixed seed must be byte-identical across runs.
    let rrt1 = dir.path().join("rrt1");
    let rrt2 = dir.path().join("rrt2");
    for out in [&rrt1, &rrt2] {
        let run = gmdm(&[
            "plan",
            "--scenario",
            &scenario,
            "--planner",
            "rrt",
            "--max-nodes",
            "150",
            "--seed",
            "11",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(
            run.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&run.stderr)
        );
    }
    assert_eq!(
        std::fs::read(rrt1.join("plan.json")).unwrap(),
        std::fs::read(rrt2.join("plan.json")).unwrap()
    );
    assert_eq!(
        std::fs::read(rrt1.join("path.csv")).unwrap(),
        std::fs::read(rrt2.join("path.csv")).unwrap()
    );
}

#[test]
fn montecarlo_takes_vehicle_from_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "slow.json",
        r#"{"vehicle": {"v_min": 0.5, "v_max": 0.5, "omega_max": 1.0}}"#,
    );
    let out = dir.path().join("mc");
    let run = gmdm(&[
        "montecarlo",
        "--trials",
        "20",
        "--models",
        "dubins",
        "--seed",
        "1",
        "--scenario",
        &scenario,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["spec"]["vehicle"]["v_max"].as_f64().unwrap(), 0.5);
    // Half the speed of the default vehicle: travel times are long.
    assert!(report["models"][0]["summary"]["median"].as_f64().unwrap() > 5.0);
}

#[test]
fn plan_start_equals_goal_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "trivial.json",
        r#"{
            "vehicle": {"v_min": 0.3, "v_max": 1.0, "omega_max": 1.0},
            "bounds": {"min": [-2.4, -2.4], "max": [2.4, 2.4]},
            "start": [0.0, 0.0, 0.0],
            "goal": [0.0, 0.0, 0.0]
        }"#,
    );
    let out_dir = dir.path().join("trivial");
    let run = gmdm(&[
        "plan",
        "--scenario",
        &scenario,
        "--planner",
        "grid",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0));
    let plan: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out_dir.join("plan.json")).unwrap()).unwrap();
    assert_eq!(plan["cost"].as_f64().unwrap(), 0.0);
    assert!(plan["legs"].as_array().unwrap().is_empty());
}

#[test]
fn plan_walled_off_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "walled.json",
        r#"{
            "vehicle": {"v_min": 0.3, "v_max": 1.0, "omega_max": 1.0},
            "obstacles": [{"polygon": {"vertices": [[1.6, -3.6], [2.4, -3.6], [2.4, 3.6], [1.6, 3.6]]}}],
            "bounds": {"min": [-1.4, -3.4], "max": [5.4, 3.4]},
            "start": [0.0, 0.0, 0.0],
            "goal": [5.0, 0.0, 0.0]
        }"#,
    );
    let out = gmdm(&[
        "plan",
        "--scenario",
        &scenario,
        "--planner",
        "grid",
        "--out",
        dir.path().join("w").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tsp_counts_pose_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "tour.json",
        r#"{
            "vehicle": {"v_min": 0.3, "v_max": 1.0, "omega_max": 1.0},
            "start": [0.0, 0.0, 0.0],
            "tsp": {"points": [[2.0, 0.0], [3.0, 2.5], [0.0, 3.0]], "headings": 4}
        }"#,
    );
    let out_dir = dir.path().join("t");
    let run = gmdm(&[
        "tsp",
        "--scenario",
        &scenario,
        "--k",
        "2",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let tour: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out_dir.join("tour.json")).unwrap()).unwrap();
    assert_eq!(tour["pose_pairs_solved"].as_u64().unwrap(), 120);
    assert_eq!(tour["order"].as_array().unwrap().len(), 3);
    assert_eq!(tour["legs"].as_array().unwrap().len(), 4);
}
