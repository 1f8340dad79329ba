//! Candidate path-type enumeration.
//!
//! A planner searches over a finite family of (word, speed triple)
//! combinations. With `k` uniformly spaced speeds per segment the full
//! family has `6 k^3` members; pinning straight segments to `v_max` (the
//! primed variant, the right choice for pure time optimality) shrinks it to
//! `2 k^3 + 4 k^2`. Turns always run at `|omega| = omega_max`; `k = 1`
//! recovers the classic Dubins set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::se2::{ControlInput, VehicleLimits};
use crate::solver::{controls_for, PathType};

/// `k` uniformly spaced speeds in `[v_min, v_max]`; `k = 1` keeps only
/// `v_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpeedSet {
    pub speeds: Vec<f64>,
}

impl SpeedSet {
    pub fn uniform(limits: &VehicleLimits, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        let speeds = if k == 1 {
            vec![limits.v_max]
        } else {
            let mut speeds: Vec<f64> = (0..k)
                .map(|i| limits.v_min + i as f64 * (limits.v_max - limits.v_min) / (k as f64 - 1.0))
                .collect();
            // Keep the endpoints exact; the interpolation can drift an ulp.
            speeds[k - 1] = limits.v_max;
            speeds
        };
        Ok(Self { speeds })
    }

    pub fn k(&self) -> usize {
        self.speeds.len()
    }
}

/// Which enumeration family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// All `6 k^3` speed assignments.
    Gmdm,
    /// Straight segments pinned to `v_max`: `2 k^3 + 4 k^2` assignments.
    GmdmPrime,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "gmdm" => Some(Variant::Gmdm),
            "gmdm-prime" | "gmdm'" | "prime" => Some(Variant::GmdmPrime),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Gmdm => "gmdm",
            Variant::GmdmPrime => "gmdm-prime",
        }
    }
}

/// One candidate: a word plus the controls of its three segments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub path_type: PathType,
    pub controls: [ControlInput; 3],
}

/// The enumerated candidate family a query minimizes over.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub variant: Variant,
    pub k: usize,
    pub limits: VehicleLimits,
    pub entries: Vec<Candidate>,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Enumerate the candidate family in deterministic order: words in the
/// canonical order LSL, RSR, LSR, RSL, LRL, RLR, speed triples
/// lexicographically within each word.
pub fn enumerate_candidates(
    limits: &VehicleLimits,
    k: usize,
    variant: Variant,
) -> Result<CandidateSet> {
    let speed_set = SpeedSet::uniform(limits, k)?;
    let speeds = &speed_set.speeds;
    let mut entries = Vec::new();
    for word in PathType::ALL {
        let straight_middle = !word.is_ccc();
        let mid_speeds: &[f64] = if straight_middle && variant == Variant::GmdmPrime {
            std::slice::from_ref(speeds.last().expect("nonempty speed set"))
        } else {
            speeds
        };
        for &v1 in speeds {
            for &v2 in mid_speeds {
                for &v3 in speeds {
                    entries.push(Candidate {
                        path_type: word,
                        controls: controls_for(word, [v1, v2, v3], limits.omega_max),
                    });
                }
            }
        }
    }
    Ok(CandidateSet {
        variant,
        k,
        limits: *limits,
        entries,
    })
}
