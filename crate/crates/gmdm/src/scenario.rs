//! JSON scenario files.
//!
//! A scenario bundles the vehicle envelope, risk parameters, obstacle set,
//! optional bounds, optional start/goal poses, and an optional tour
//! section. All lengths are meters, all angles radians. Poses are
//! `[x, y, theta]` triples.
//!
//! ```json
//! {
//!   "vehicle": {"v_min": 0.3, "v_max": 1.0, "omega_max": 1.0},
//!   "risk": {"t_star": 3.0, "lambda": 2.0},
//!   "obstacles": [
//!     {"circle": {"center": [3.0, 0.0], "radius": 1.0}},
//!     {"polygon": {"vertices": [[5.0, -1.0], [6.0, -1.0], [6.0, 1.0], [5.0, 1.0]]}}
//!   ],
//!   "bounds": {"min": [-2.0, -5.0], "max": [10.0, 5.0]},
//!   "start": [0.0, 0.0, 0.0],
//!   "goal": [8.0, 0.0, 3.14159],
//!   "tsp": {"points": [[2.0, 0.0], [4.0, 3.0]], "headings": 4}
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cost::RiskParams;
use crate::env::{Aabb, Environment, Obstacle};
use crate::error::{Error, Result};
use crate::se2::{Pose, VehicleLimits};

/// Tour section: points of interest and the number of evenly spaced
/// candidate headings at each.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TspSection {
    pub points: Vec<[f64; 2]>,
    pub headings: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub vehicle: VehicleLimits,
    #[serde(default = "RiskParams::standard")]
    pub risk: RiskParams,
    #[serde(default)]
    pub obstacles: Vec<Obstacle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Aabb>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goal: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tsp: Option<TspSection>,
}

impl Scenario {
    /// A scenario with the paper-standard vehicle and nothing else.
    pub fn default_vehicle() -> Self {
        Self {
            vehicle: VehicleLimits {
                v_min: 0.3,
                v_max: 1.0,
                omega_max: 1.0,
            },
            risk: RiskParams::standard(),
            obstacles: Vec::new(),
            bounds: None,
            start: None,
            goal: None,
            tsp: None,
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let scenario: Scenario = serde_json::from_str(&text)?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        VehicleLimits::new(
            self.vehicle.v_min,
            self.vehicle.v_max,
            self.vehicle.omega_max,
        )?;
        RiskParams::new(self.risk.t_star, self.risk.lambda)?;
        for o in &self.obstacles {
            o.validate()?;
        }
        if let Some(b) = &self.bounds {
            Aabb::new(b.min, b.max)?;
        }
        for pose in [self.start, self.goal].into_iter().flatten() {
            if pose.iter().any(|v| !v.is_finite()) {
                return Err(Error::Scenario("pose has non-finite components".into()));
            }
        }
        if let Some(t) = &self.tsp {
            if t.points.is_empty() || t.headings == 0 {
                return Err(Error::Scenario(
                    "tsp section needs points and at least one heading".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn environment(&self) -> Result<Environment> {
        Environment::new(self.obstacles.clone(), self.bounds)
    }

    pub fn start_pose(&self) -> Option<Pose> {
        self.start.map(|[x, y, t]| Pose::new(x, y, t))
    }

    pub fn goal_pose(&self) -> Option<Pose> {
        self.goal.map(|[x, y, t]| Pose::new(x, y, t))
    }
}
