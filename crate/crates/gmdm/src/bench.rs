//! Seeded Monte-Carlo benchmark harness.
//!
//! A benchmark draws a fixed set of goal poses (uniform position over a
//! disk, uniform heading) from a named seedable generator (ChaCha8,
//! seeded with a 64-bit value) and solves every goal with every configured
//! candidate model. All models see the identical goal sequence, so travel
//! time comparisons are paired. Travel times are deterministic for a given
//! seed; per-solve wall times are recorded separately as informational
//! data.

use std::io::Write;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angle::TWO_PI;
use crate::candidates::{enumerate_candidates, CandidateSet, Variant};
use crate::cost::RiskParams;
use crate::error::{Error, Result};
use crate::planner::{best_path, DEFAULT_DS_MAX};
use crate::se2::{Pose, VehicleLimits};

/// One benchmarked model: a candidate-set variant with its speed count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub variant: Variant,
    pub k: usize,
}

impl ModelSpec {
    pub fn name(&self) -> String {
        if self.k == 1 {
            "dubins".to_string()
        } else {
            format!("{}-{}", self.variant.name(), self.k)
        }
    }

    /// Parse names like `dubins`, `gmdm-3`, `gmdm-prime-2`.
    pub fn parse(s: &str) -> Option<ModelSpec> {
        let lower = s.to_ascii_lowercase();
        if lower == "dubins" {
            return Some(ModelSpec {
                variant: Variant::GmdmPrime,
                k: 1,
            });
        }
        let (variant, rest) = if let Some(rest) = lower.strip_prefix("gmdm-prime-") {
            (Variant::GmdmPrime, rest)
        } else {
            (Variant::Gmdm, lower.strip_prefix("gmdm-")?)
        };
        rest.parse::<usize>()
            .ok()
            .filter(|&k| k >= 1)
            .map(|k| ModelSpec { variant, k })
    }

    pub fn candidate_set(&self, limits: &VehicleLimits) -> Result<CandidateSet> {
        enumerate_candidates(limits, self.k, self.variant)
    }
}

/// Benchmark configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkSpec {
    pub trials: usize,
    /// Radius of the goal-position disk around the start pose (m).
    pub disk_radius: f64,
    pub models: Vec<ModelSpec>,
    pub seed: u64,
    pub vehicle: VehicleLimits,
}

impl BenchmarkSpec {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be positive".into()));
        }
        if self.disk_radius <= 0.0 || self.disk_radius.is_nan() {
            return Err(Error::InvalidArgument(
                "disk radius must be positive".into(),
            ));
        }
        if self.models.is_empty() {
            return Err(Error::InvalidArgument("no models configured".into()));
        }
        Ok(())
    }
}

/// Order statistics of one model's travel times.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    pub min: f64,
    pub max: f64,
}

/// Linear-interpolation quantile of already-sorted data.
fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    let pos = p * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
    }
}

/// Summary statistics of a raw sample.
pub fn summarize(values: &[f64]) -> Summary {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Summary {
        median: quantile_sorted(&sorted, 0.5),
        q1: quantile_sorted(&sorted, 0.25),
        q3: quantile_sorted(&sorted, 0.75),
        min: sorted[0],
        max: *sorted.last().expect("nonempty"),
    }
}

/// Results for one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelReport {
    pub name: String,
    pub travel_times: Vec<f64>,
    /// Per-solve wall times in seconds; informational, machine-dependent.
    pub solve_times: Vec<f64>,
    pub summary: Summary,
    pub mean_solve_time: f64,
}

/// The full benchmark output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkReport {
    pub spec: BenchmarkSpec,
    pub models: Vec<ModelReport>,
}

/// Sample the shared goal set: positions uniform over the disk
/// (`r = R * sqrt(u)`), headings uniform over `[0, 2*pi)`.
pub fn sample_goals(spec: &BenchmarkSpec, start: &Pose) -> Vec<Pose> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.trials)
        .map(|_| {
            let r = spec.disk_radius * rng.gen::<f64>().sqrt();
            let ang = rng.gen_range(0.0..TWO_PI);
            let theta = rng.gen_range(0.0..TWO_PI);
            Pose::new(start.x + r * ang.cos(), start.y + r * ang.sin(), theta)
        })
        .collect()
}

/// Run the benchmark from the origin pose in an empty workspace.
pub fn run_montecarlo(spec: &BenchmarkSpec) -> Result<BenchmarkReport> {
    spec.validate()?;
    let start = Pose::new(0.0, 0.0, 0.0);
    let goals = sample_goals(spec, &start);
    let params = RiskParams::new(1.0, 0.0).expect("valid params");

    let mut models = Vec::new();
    for model in &spec.models {
        let set = model.candidate_set(&spec.vehicle)?;
        let results: Vec<(f64, f64)> = goals
            .par_iter()
            .map(|goal| {
                let t0 = std::time::Instant::now();
                let best = best_path(&start, goal, &set, None, &params, DEFAULT_DS_MAX)
                    .expect("enumerated candidates are consistent")
                    .expect("LSL/RSR give full reachability in an empty workspace");
                (best.solution.total_time, t0.elapsed().as_secs_f64())
            })
            .collect();
        let travel_times: Vec<f64> = results.iter().map(|r| r.0).collect();
        let solve_times: Vec<f64> = results.iter().map(|r| r.1).collect();
        let summary = summarize(&travel_times);
        let mean_solve_time = solve_times.iter().sum::<f64>() / solve_times.len() as f64;
        models.push(ModelReport {
            name: model.name(),
            travel_times,
            solve_times,
            summary,
            mean_solve_time,
        });
    }
    Ok(BenchmarkReport {
        spec: spec.clone(),
        models,
    })
}

impl BenchmarkReport {
    /// Write the report into a directory:
    /// `report.json` (spec + summaries), `travel_times.csv`
    /// (trial, model, travel_time_s; deterministic for a fixed seed), and
    /// `solve_times.csv` (informational wall times).
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;

        // Wall-clock data stays out of report.json so the file is
        // byte-identical across runs with the same seed.
        #[derive(Serialize)]
        struct ReportJson<'a> {
            spec: &'a BenchmarkSpec,
            models: Vec<ModelSummaryJson<'a>>,
        }
        #[derive(Serialize)]
        struct ModelSummaryJson<'a> {
            name: &'a str,
            summary: &'a Summary,
        }
        let json = ReportJson {
            spec: &self.spec,
            models: self
                .models
                .iter()
                .map(|m| ModelSummaryJson {
                    name: &m.name,
                    summary: &m.summary,
                })
                .collect(),
        };
        std::fs::write(
            dir.join("report.json"),
            serde_json::to_string_pretty(&json)?,
        )?;

        let mut f = std::io::BufWriter::new(std::fs::File::create(dir.join("travel_times.csv"))?);
        writeln!(f, "trial,model,travel_time_s")?;
        for m in &self.models {
            for (i, t) in m.travel_times.iter().enumerate() {
                // Default float formatting round-trips, so summaries are
                // recomputable from the raw file.
                writeln!(f, "{i},{},{t}", m.name)?;
            }
        }
        f.flush()?;

        let mut f = std::io::BufWriter::new(std::fs::File::create(dir.join("solve_times.csv"))?);
        writeln!(f, "trial,model,solve_time_s")?;
        for m in &self.models {
            for (i, t) in m.solve_times.iter().enumerate() {
                writeln!(f, "{i},{},{t:.3e}", m.name)?;
            }
        }
        f.flush()?;
        Ok(())
    }
}
