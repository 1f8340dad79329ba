//! Multi-speed Dubins motion model.
//!
//! The classic Dubins model drives a curvature-bounded vehicle at one
//! constant speed, which forces a single turning radius. This crate
//! generalizes it: each of the three segments of a Dubins word may run at
//! its own speed, so slow sharp turns and fast straights can mix freely.
//! The forward and inverse problems stay closed-form, which keeps per-query
//! costs in the microsecond range and makes the model practical inside
//! sampling-based and lattice planners.
//!
//! The crate provides:
//!
//! - [`se2`]: SE(2) poses, control inputs, and the constant-input motion
//!   primitives;
//! - [`solver`]: the six-word path taxonomy with analytical forward and
//!   inverse solvers;
//! - [`reach`]: closed-form reachability predicates for the CSC and CCC
//!   classes and grid samplers for visualizing reachable slices;
//! - [`mod@env`] and [`cost`]: obstacle environments, tangential clearance, and
//!   the time-risk path functional;
//! - [`candidates`] and [`planner`]: candidate-set enumeration, best-path
//!   selection, a lookup-table grid A*, an RRT*-style sampler, and an exact
//!   small-instance traveling-salesman harness;
//! - [`scenario`], [`mod@bench`], and [`cli`]: JSON scenario files, the
//!   Monte-Carlo benchmark harness, and the `gmdm` command-line front end.
//!
//! Every solver operation is a pure function of its inputs; all types are
//! immutable values, so everything here can be called concurrently without
//! synchronization.
//!
//! # Example
//!
//! ```
//! use gmdm::candidates::{enumerate_candidates, Variant};
//! use gmdm::cost::RiskParams;
//! use gmdm::planner::{best_path, DEFAULT_DS_MAX};
//! use gmdm::se2::{Pose, VehicleLimits};
//!
//! let limits = VehicleLimits::new(0.3, 1.0, 1.0)?;
//! let candidates = enumerate_candidates(&limits, 2, Variant::GmdmPrime)?;
//! let best = best_path(
//!     &Pose::new(0.0, 0.0, 0.0),
//!     &Pose::new(3.0, 1.0, 0.5),
//!     &candidates,
//!     None,
//!     &RiskParams::new(3.0, 0.0)?,
//!     DEFAULT_DS_MAX,
//! )?
//! .expect("reachable in an empty workspace");
//! assert!(best.solution.total_time > 0.0);
//! # Ok::<(), gmdm::Error>(())
//! ```
//!
//! See the crate examples for runnable demonstrations of each capability.

pub mod angle;
pub mod bench;
pub mod candidates;
pub mod cli;
pub mod cost;
pub mod env;
pub mod error;
pub mod planner;
pub mod reach;
pub mod scenario;
pub mod se2;
pub mod solver;

pub use error::{Error, Result};
pub use se2::{ControlInput, Pose, VehicleLimits};
pub use solver::{PathSolution, PathType, SegmentSpec};
