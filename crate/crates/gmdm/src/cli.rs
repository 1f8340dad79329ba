//! Command-line front end.
//!
//! Subcommands: `solve` (single best-path query), `reach` (reachability
//! slice export), `montecarlo` (seeded benchmark), `plan` (grid or RRT*
//! planning on a scenario), and `tsp` (exact small tours). Exit codes:
//! 0 on success, 1 on usage or I/O errors, 2 when no solution exists.
//!
//! Structured results go to stdout or `--out` files as JSON/CSV/PGM;
//! wall-clock diagnostics go to stderr so output files and stdout stay
//! byte-identical for identical inputs and seeds.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::{run_montecarlo, BenchmarkSpec, ModelSpec};
use crate::candidates::{enumerate_candidates, CandidateSet, Variant};
use crate::cost::RiskParams;
use crate::env::Aabb;
use crate::error::{Error, Result};
use crate::planner::{
    best_path, build_lookup_table, plan_grid_with_table, plan_rrt_star, GridSpec, PlanResult,
    RrtConfig, DEFAULT_DS_MAX,
};
use crate::reach::{ccc_reachable, csc_reachable, sample_reach_slice};
use crate::scenario::Scenario;
use crate::se2::{Pose, VehicleLimits};
use crate::solver::PathType;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_SOLUTION: i32 = 2;

#[derive(Parser)]
#[command(
    name = "gmdm",
    about = "Multi-speed Dubins paths: solvers, reachability, time-risk costs, planners",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the best path between two poses and print it as JSON.
    Solve(SolveArgs),
    /// Sample a reachability slice and write CSV + PGM files.
    Reach(ReachArgs),
    /// Run the seeded Monte-Carlo travel-time benchmark.
    Montecarlo(MontecarloArgs),
    /// Plan through a scenario with the grid or RRT* planner.
    Plan(PlanArgs),
    /// Solve an exact tour over the scenario's points of interest.
    Tsp(TspArgs),
}

#[derive(Args)]
struct ModelFlags {
    /// Number of speeds per segment.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Candidate family: `gmdm` or `gmdm-prime` (straights at v_max).
    #[arg(long, default_value = "gmdm-prime")]
    variant: String,
}

impl ModelFlags {
    fn candidate_set(&self, limits: &VehicleLimits) -> Result<CandidateSet> {
        let variant = Variant::parse(&self.variant)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variant '{}'", self.variant)))?;
        enumerate_candidates(limits, self.k, variant)
    }
}

#[derive(Args)]
struct RiskFlags {
    /// Risk-free collision threshold in seconds.
    #[arg(long)]
    t_star: Option<f64>,
    /// Risk weight; 0 plans for pure travel time.
    #[arg(long)]
    lambda: Option<f64>,
}

impl RiskFlags {
    fn resolve(&self, base: RiskParams) -> Result<RiskParams> {
        RiskParams::new(
            self.t_star.unwrap_or(base.t_star),
            self.lambda.unwrap_or(base.lambda),
        )
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Start pose as `x,y,theta`.
    #[arg(long, allow_hyphen_values = true)]
    start: String,
    /// Goal pose as `x,y,theta`.
    #[arg(long, allow_hyphen_values = true)]
    goal: String,
    /// Scenario file providing vehicle, risk, and obstacles.
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[command(flatten)]
    model: ModelFlags,
    /// Restrict the search to a single word (LSL, RSR, LSR, RSL, LRL, RLR).
    #[arg(long)]
    word: Option<String>,
    #[command(flatten)]
    risk: RiskFlags,
    /// Sampling step for collision checks and quadrature (m).
    #[arg(long, default_value_t = DEFAULT_DS_MAX)]
    ds_max: f64,
}

#[derive(Args)]
struct ReachArgs {
    /// Path word whose reachability to sample.
    #[arg(long)]
    word: String,
    /// Goal heading of the slice (rad).
    #[arg(long, default_value_t = 0.0)]
    theta_f: f64,
    /// Per-segment speeds as `v1,v2,v3`.
    #[arg(long, default_value = "0.1,0.5,1.0")]
    speeds: String,
    #[arg(long, default_value_t = 1.0)]
    omega_max: f64,
    /// Full window width and height (m), centered on the start pose.
    #[arg(long, default_value_t = 6.0)]
    window: f64,
    /// Grid spacing (m).
    #[arg(long, default_value_t = 0.02)]
    spacing: f64,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct MontecarloArgs {
    #[arg(long, default_value_t = 5000)]
    trials: usize,
    /// Goal-disk radius around the start (m).
    #[arg(long, default_value_t = 3.0)]
    radius: f64,
    /// Comma-separated model names, e.g. `dubins,gmdm-prime-2`.
    #[arg(long, default_value = "dubins,gmdm-prime-2,gmdm-prime-3,gmdm-prime-4")]
    models: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Scenario file supplying the vehicle limits.
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(long, default_value_t = 0.3)]
    v_min: f64,
    #[arg(long, default_value_t = 1.0)]
    v_max: f64,
    #[arg(long, default_value_t = 1.0)]
    omega_max: f64,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PlanArgs {
    /// Scenario file with obstacles, bounds, and (optionally) start/goal.
    #[arg(long)]
    scenario: PathBuf,
    /// `grid` or `rrt`.
    #[arg(long)]
    planner: String,
    /// Start pose `x,y,theta`; overrides the scenario.
    #[arg(long, allow_hyphen_values = true)]
    start: Option<String>,
    /// Goal pose `x,y,theta`; overrides the scenario.
    #[arg(long, allow_hyphen_values = true)]
    goal: Option<String>,
    #[command(flatten)]
    model: ModelFlags,
    #[command(flatten)]
    risk: RiskFlags,
    /// Grid cell size (m).
    #[arg(long, default_value_t = 1.0)]
    cell: f64,
    /// Number of grid headings.
    #[arg(long, default_value_t = 8)]
    headings: usize,
    /// RRT* iteration budget.
    #[arg(long, default_value_t = 1500)]
    max_nodes: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_DS_MAX)]
    ds_max: f64,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TspArgs {
    /// Scenario file with a `tsp` section.
    #[arg(long)]
    scenario: PathBuf,
    /// Start pose `x,y,theta`; overrides the scenario (default origin).
    #[arg(long, allow_hyphen_values = true)]
    start: Option<String>,
    #[command(flatten)]
    model: ModelFlags,
    /// Evaluate tour legs against the scenario obstacles.
    #[arg(long, default_value_t = false)]
    with_obstacles: bool,
    #[arg(long, default_value_t = DEFAULT_DS_MAX)]
    ds_max: f64,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

fn parse_pose(text: &str) -> Result<Pose> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidArgument(format!(
            "pose must be `x,y,theta`, got '{text}'"
        )));
    }
    let mut vals = [0.0; 3];
    for (i, p) in parts.iter().enumerate() {
        vals[i] = p
            .trim()
            .parse::<f64>()
            .map_err(|e| Error::InvalidArgument(format!("bad pose component '{p}': {e}")))?;
        if !vals[i].is_finite() {
            return Err(Error::InvalidArgument(format!(
                "pose component '{p}' is not finite"
            )));
        }
    }
    Ok(Pose::new(vals[0], vals[1], vals[2]))
}

fn parse_speeds(text: &str) -> Result<[f64; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidArgument(format!(
            "speeds must be `v1,v2,v3`, got '{text}'"
        )));
    }
    let mut vals = [0.0; 3];
    for (i, p) in parts.iter().enumerate() {
        vals[i] = p
            .trim()
            .parse::<f64>()
            .map_err(|e| Error::InvalidArgument(format!("bad speed '{p}': {e}")))?;
        if vals[i] <= 0.0 || vals[i].is_nan() {
            return Err(Error::InvalidArgument(format!(
                "speeds must be positive, got {}",
                vals[i]
            )));
        }
    }
    Ok(vals)
}

#[derive(Serialize)]
struct SegmentJson {
    #[serde(rename = "type")]
    kind: char,
    v: f64,
    omega: f64,
    tau: f64,
}

#[derive(Serialize)]
struct SolutionJson {
    path_type: String,
    segments: Vec<SegmentJson>,
    total_time: f64,
    cost: f64,
}

fn solution_json(sol: &crate::solver::PathSolution, cost: f64) -> SolutionJson {
    let segments = sol
        .segments
        .iter()
        .map(|s| SegmentJson {
            kind: if s.input.omega > 0.0 {
                'L'
            } else if s.input.omega < 0.0 {
                'R'
            } else {
                'S'
            },
            v: s.input.v,
            omega: s.input.omega,
            tau: s.tau,
        })
        .collect();
    SolutionJson {
        path_type: sol.path_type.name().to_string(),
        segments,
        total_time: sol.total_time,
        cost,
    }
}

#[derive(Serialize)]
struct PlanJson {
    planner: String,
    waypoints: Vec<[f64; 3]>,
    legs: Vec<SolutionJson>,
    cost: f64,
    total_time: f64,
    nodes_expanded: usize,
    tree_size: usize,
}

fn plan_json(planner: &str, plan: &PlanResult) -> PlanJson {
    PlanJson {
        planner: planner.to_string(),
        waypoints: plan.waypoints.iter().map(|p| [p.x, p.y, p.theta]).collect(),
        legs: plan
            .solutions
            .iter()
            .map(|s| solution_json(s, s.total_time))
            .collect(),
        cost: plan.cost,
        total_time: plan.total_time,
        nodes_expanded: plan.diagnostics.nodes_expanded,
        tree_size: plan.diagnostics.tree_size,
    }
}

fn write_polyline(plan: &PlanResult, ds_max: f64, path: &Path) -> Result<()> {
    use std::io::Write;
    let points = plan.polyline(ds_max)?;
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(f, "x,y,theta")?;
    for p in points {
        writeln!(f, "{},{},{}", p.x, p.y, p.theta)?;
    }
    f.flush()?;
    Ok(())
}

fn cmd_solve(args: &SolveArgs) -> Result<i32> {
    let scenario = match &args.scenario {
        Some(path) => Scenario::load(path)?,
        None => Scenario::default_vehicle(),
    };
    let start = parse_pose(&args.start)?;
    let goal = parse_pose(&args.goal)?;
    let mut set = args.model.candidate_set(&scenario.vehicle)?;
    if let Some(word) = &args.word {
        let word = PathType::parse(word)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown word '{word}'")))?;
        set.entries.retain(|c| c.path_type == word);
    }
    let params = args.risk.resolve(scenario.risk)?;
    let env = scenario.environment()?;
    let env_ref = (!env.obstacles.is_empty() || env.bounds.is_some()).then_some(&env);
    match best_path(&start, &goal, &set, env_ref, &params, args.ds_max)? {
        Some(best) => {
            let json = solution_json(&best.solution, best.cost);
            println!("{}", serde_json::to_string_pretty(&json)?);
            Ok(EXIT_OK)
        }
        None => {
            eprintln!("no feasible path for the requested candidates");
            Ok(EXIT_NO_SOLUTION)
        }
    }
}

fn cmd_reach(args: &ReachArgs) -> Result<i32> {
    let word = PathType::parse(&args.word)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown word '{}'", args.word)))?;
    if args.omega_max <= 0.0 || args.omega_max.is_nan() {
        return Err(Error::InvalidArgument("omega_max must be positive".into()));
    }
    let speeds = parse_speeds(&args.speeds)?;
    let signs = word.signs();
    let radius = |i: usize| speeds[i] / (f64::from(signs[i]) * args.omega_max);
    let p0 = Pose::new(0.0, 0.0, 0.0);
    let window = Aabb::centered(p0.x, p0.y, args.window, args.window)?;
    let slice = if word.is_ccc() {
        let (r1, r2, r3) = (radius(0), radius(1), radius(2));
        sample_reach_slice(
            args.theta_f,
            |pf| ccc_reachable(&p0, pf, r1, r2, r3),
            &window,
            args.spacing,
        )?
    } else {
        let (r1, r3) = (radius(0), radius(2));
        sample_reach_slice(
            args.theta_f,
            |pf| csc_reachable(&p0, pf, r1, r3),
            &window,
            args.spacing,
        )?
    };
    std::fs::create_dir_all(&args.out)?;
    let stem = format!("reach_{}", word.name().to_ascii_lowercase());
    slice.write_csv(&args.out.join(format!("{stem}.csv")))?;
    slice.write_pgm(&args.out.join(format!("{stem}.pgm")))?;
    let reachable = slice.cells.iter().filter(|&&c| c).count();
    println!(
        "{} cells sampled, {} reachable ({}x{} grid)",
        slice.cells.len(),
        reachable,
        slice.nx,
        slice.ny
    );
    Ok(EXIT_OK)
}

fn cmd_montecarlo(args: &MontecarloArgs) -> Result<i32> {
    let vehicle = match &args.scenario {
        Some(path) => Scenario::load(path)?.vehicle,
        None => VehicleLimits::new(args.v_min, args.v_max, args.omega_max)?,
    };
    let mut models = Vec::new();
    for name in args.models.split(',') {
        let name = name.trim();
        let model = ModelSpec::parse(name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown model '{name}'")))?;
        models.push(model);
    }
    let spec = BenchmarkSpec {
        trials: args.trials,
        disk_radius: args.radius,
        models,
        seed: args.seed,
        vehicle,
    };
    let t0 = std::time::Instant::now();
    let report = run_montecarlo(&spec)?;
    report.write_to(&args.out)?;
    for m in &report.models {
        println!(
            "{}: median {:.3} s, q1 {:.3} s, q3 {:.3} s, min {:.3} s, max {:.3} s",
            m.name, m.summary.median, m.summary.q1, m.summary.q3, m.summary.min, m.summary.max
        );
        eprintln!("{}: mean solve time {:.3e} s", m.name, m.mean_solve_time);
    }
    eprintln!("benchmark wall time: {:.2} s", t0.elapsed().as_secs_f64());
    Ok(EXIT_OK)
}

fn cmd_plan(args: &PlanArgs) -> Result<i32> {
    let scenario = Scenario::load(&args.scenario)?;
    let start = match &args.start {
        Some(s) => parse_pose(s)?,
        None => scenario
            .start_pose()
            .ok_or_else(|| Error::Scenario("scenario has no start pose".into()))?,
    };
    let goal = match &args.goal {
        Some(s) => parse_pose(s)?,
        None => scenario
            .goal_pose()
            .ok_or_else(|| Error::Scenario("scenario has no goal pose".into()))?,
    };
    let env = scenario.environment()?;
    let set = args.model.candidate_set(&scenario.vehicle)?;
    let params = args.risk.resolve(scenario.risk)?;

    let plan = match args.planner.as_str() {
        "grid" => {
            let spec = GridSpec::new(args.cell, args.headings)?;
            let table = build_lookup_table(&spec, &set)?;
            plan_grid_with_table(&env, &table, &start, &goal, &params, args.ds_max)?
        }
        "rrt" => {
            let mut config = RrtConfig::new(args.max_nodes, args.seed);
            config.ds_max = args.ds_max;
            plan_rrt_star(&env, &set, &start, &goal, &config)?
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown planner '{other}' (use grid or rrt)"
            )))
        }
    };

    match plan {
        Some(plan) => {
            std::fs::create_dir_all(&args.out)?;
            let json = plan_json(&args.planner, &plan);
            std::fs::write(
                args.out.join("plan.json"),
                serde_json::to_string_pretty(&json)?,
            )?;
            write_polyline(&plan, args.ds_max, &args.out.join("path.csv"))?;
            println!(
                "plan: {} legs, J = {:.4}, T = {:.4} s, nodes = {}, tree = {}",
                plan.solutions.len(),
                plan.cost,
                plan.total_time,
                plan.diagnostics.nodes_expanded,
                plan.diagnostics.tree_size
            );
            eprintln!("planner wall time: {:.3} s", plan.diagnostics.wall_time_s);
            Ok(EXIT_OK)
        }
        None => {
            eprintln!("no path found");
            Ok(EXIT_NO_SOLUTION)
        }
    }
}

fn cmd_tsp(args: &TspArgs) -> Result<i32> {
    let scenario = Scenario::load(&args.scenario)?;
    let tsp = scenario
        .tsp
        .clone()
        .ok_or_else(|| Error::Scenario("scenario has no tsp section".into()))?;
    let start = match &args.start {
        Some(s) => parse_pose(s)?,
        None => scenario.start_pose().unwrap_or(Pose::new(0.0, 0.0, 0.0)),
    };
    let set = args.model.candidate_set(&scenario.vehicle)?;
    let env = scenario.environment()?;
    let env_ref = args.with_obstacles.then_some(&env);
    let params = scenario.risk;
    let result = crate::planner::solve_tsp(
        &tsp.points,
        tsp.headings,
        &start,
        &set,
        env_ref,
        &params,
        args.ds_max,
    )?;
    match result {
        Some(tour) => {
            std::fs::create_dir_all(&args.out)?;
            #[derive(Serialize)]
            struct TourJson {
                order: Vec<usize>,
                headings: Vec<usize>,
                pose_pairs_solved: usize,
                cost: f64,
                total_time: f64,
                waypoints: Vec<[f64; 3]>,
                legs: Vec<SolutionJson>,
            }
            let json = TourJson {
                order: tour.order.clone(),
                headings: tour.headings.clone(),
                pose_pairs_solved: tour.pose_pairs_solved,
                cost: tour.plan.cost,
                total_time: tour.plan.total_time,
                waypoints: tour
                    .plan
                    .waypoints
                    .iter()
                    .map(|p| [p.x, p.y, p.theta])
                    .collect(),
                legs: tour
                    .plan
                    .solutions
                    .iter()
                    .map(|s| solution_json(s, s.total_time))
                    .collect(),
            };
            std::fs::write(
                args.out.join("tour.json"),
                serde_json::to_string_pretty(&json)?,
            )?;
            write_polyline(&tour.plan, args.ds_max, &args.out.join("tour_path.csv"))?;
            println!(
                "tour: order {:?}, {} pose pairs solved, T = {:.4} s",
                tour.order, tour.pose_pairs_solved, tour.plan.total_time
            );
            Ok(EXIT_OK)
        }
        None => {
            eprintln!("no feasible tour");
            Ok(EXIT_NO_SOLUTION)
        }
    }
}

/// Parse `std::env::args` and run. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Reach(args) => cmd_reach(args),
        Command::Montecarlo(args) => cmd_montecarlo(args),
        Command::Plan(args) => cmd_plan(args),
        Command::Tsp(args) => cmd_tsp(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
