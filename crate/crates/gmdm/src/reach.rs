//! Closed-form reachability predicates and grid samplers.
//!
//! For fixed controls, the set of goal poses a CSC word can reach excludes
//! an open disk of radius `|r31|` around a heading-dependent center; a CCC
//! word reaches exactly a closed annulus. The union of the LSL and RSR
//! words covers all of SE(2) because their excluded disks are disjoint.
//! Boundary comparisons carry a small absolute slack so poses exactly on a
//! circle stay on the reachable side, mirroring the solver clamps.

use std::io::Write;
use std::path::Path;

use crate::env::Aabb;
use crate::error::Result;
use crate::se2::Pose;

/// Absolute slack (in squared meters) for boundary comparisons.
const BOUNDARY_SLACK: f64 = 1e-12;

/// Center and radii of the reachability region for one word's controls.
///
/// The center depends on the goal heading:
/// `c = x0 - r1 sin(theta0) + r3 sin(theta_f)`,
/// `d = y0 + r1 cos(theta0) - r3 cos(theta_f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReachGeometry {
    pub c: f64,
    pub d: f64,
    /// `|r31|`: radius of the excluded disk (CSC) or inner annulus radius (CCC).
    pub inner_radius: f64,
    /// `|r12 - r23|`: outer annulus radius, CCC only.
    pub outer_radius: Option<f64>,
}

impl ReachGeometry {
    pub fn csc(p0: &Pose, theta_f: f64, r1: f64, r3: f64) -> Self {
        let (c, d) = center(p0, theta_f, r1, r3);
        Self {
            c,
            d,
            inner_radius: (r3 - r1).abs(),
            outer_radius: None,
        }
    }

    pub fn ccc(p0: &Pose, theta_f: f64, r1: f64, r2: f64, r3: f64) -> Self {
        let (c, d) = center(p0, theta_f, r1, r3);
        let r12 = r1 - r2;
        let r23 = r2 - r3;
        Self {
            c,
            d,
            inner_radius: (r3 - r1).abs(),
            outer_radius: Some((r12 - r23).abs()),
        }
    }
}

fn center(p0: &Pose, theta_f: f64, r1: f64, r3: f64) -> (f64, f64) {
    (
        p0.x - r1 * p0.theta.sin() + r3 * theta_f.sin(),
        p0.y + r1 * p0.theta.cos() - r3 * theta_f.cos(),
    )
}

/// CSC reachability: the goal is reachable iff it lies on or outside the
/// circle of radius `|r31|` about the heading-dependent center.
pub fn csc_reachable(p0: &Pose, pf: &Pose, r1: f64, r3: f64) -> bool {
    let (c, d) = center(p0, pf.theta, r1, r3);
    let q = (pf.x - c).powi(2) + (pf.y - d).powi(2);
    let r31 = r3 - r1;
    q >= r31 * r31 - BOUNDARY_SLACK
}

/// CCC reachability: the goal is reachable iff it lies in the closed
/// annulus with radii `|r31|` and `|r12 - r23|`.
pub fn ccc_reachable(p0: &Pose, pf: &Pose, r1: f64, r2: f64, r3: f64) -> bool {
    let (c, d) = center(p0, pf.theta, r1, r3);
    let q = (pf.x - c).powi(2) + (pf.y - d).powi(2);
    let r31 = r3 - r1;
    let outer = (r1 - r2) - (r2 - r3);
    q >= r31 * r31 - BOUNDARY_SLACK && q <= outer * outer + BOUNDARY_SLACK
}

/// Union of LSL and RSR reachability for turn radii of the given
/// magnitudes. The two excluded disks are disjoint, so this holds for every
/// pose pair; the function exists to machine-check that claim.
pub fn full_reach_holds(p0: &Pose, pf: &Pose, r1_mag: f64, r3_mag: f64) -> bool {
    debug_assert!(r1_mag > 0.0 && r3_mag > 0.0);
    csc_reachable(p0, pf, r1_mag, r3_mag) || csc_reachable(p0, pf, -r1_mag, -r3_mag)
}

/// A boolean slice of the reachable set on one `theta_f` plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ReachSlice {
    pub theta_f: f64,
    /// Lower-left cell-center coordinates.
    pub origin: [f64; 2],
    pub spacing: f64,
    pub nx: usize,
    pub ny: usize,
    /// Row-major, `y` varying slowest: `cells[j * nx + i]`.
    pub cells: Vec<bool>,
}

impl ReachSlice {
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[j * self.nx + i]
    }

    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.origin[0] + i as f64 * self.spacing,
            self.origin[1] + j as f64 * self.spacing,
        )
    }

    /// Write `x,y,reachable` rows (reachable as 0/1).
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        writeln!(f, "x,y,reachable")?;
        for j in 0..self.ny {
            for i in 0..self.nx {
                let (x, y) = self.cell_center(i, j);
                writeln!(f, "{x},{y},{}", u8::from(self.get(i, j)))?;
            }
        }
        f.flush()?;
        Ok(())
    }

    /// Write a binary PGM bitmap, white for reachable cells. Rows are
    /// emitted top-down so the image matches the plane orientation.
    pub fn write_pgm(&self, path: &Path) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        write!(f, "P5\n{} {}\n255\n", self.nx, self.ny)?;
        for j in (0..self.ny).rev() {
            let row: Vec<u8> = (0..self.nx)
                .map(|i| if self.get(i, j) { 255 } else { 0 })
                .collect();
            f.write_all(&row)?;
        }
        f.flush()?;
        Ok(())
    }
}

/// Evaluate a reachability predicate at every cell center of a window.
pub fn sample_reach_slice<F>(
    theta_f: f64,
    predicate: F,
    window: &Aabb,
    spacing: f64,
) -> Result<ReachSlice>
where
    F: Fn(&Pose) -> bool,
{
    if spacing <= 0.0 || spacing.is_nan() {
        return Err(crate::error::Error::InvalidArgument(format!(
            "spacing must be positive, got {spacing}"
        )));
    }
    let nx = ((window.max[0] - window.min[0]) / spacing).floor() as usize + 1;
    let ny = ((window.max[1] - window.min[1]) / spacing).floor() as usize + 1;
    let origin = [window.min[0], window.min[1]];
    let mut cells = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = origin[1] + j as f64 * spacing;
        for i in 0..nx {
            let x = origin[0] + i as f64 * spacing;
            cells.push(predicate(&Pose::new(x, y, theta_f)));
        }
    }
    Ok(ReachSlice {
        theta_f,
        origin,
        spacing,
        nx,
        ny,
        cells,
    })
}
