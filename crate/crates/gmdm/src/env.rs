//! Obstacle environments: circles, convex polygons, optional bounds, and
//! the ray-clearance query that feeds the risk model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::se2::Pose;

/// Axis-aligned rectangle, used both for environment bounds and for
/// reachability sampling windows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Aabb {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

impl Aabb {
    pub fn new(min: [f64; 2], max: [f64; 2]) -> Result<Self> {
        if !(min[0] < max[0] && min[1] < max[1]) {
            return Err(Error::InvalidArgument(format!(
                "empty rectangle: min {min:?}, max {max:?}"
            )));
        }
        Ok(Self { min, max })
    }

    /// Square window of the given full width centered at `(cx, cy)`.
    pub fn centered(cx: f64, cy: f64, width: f64, height: f64) -> Result<Self> {
        Self::new(
            [cx - width / 2.0, cy - height / 2.0],
            [cx + width / 2.0, cy + height / 2.0],
        )
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.min[0] && x <= self.max[0] && y >= self.min[1] && y <= self.max[1]
    }

    /// Distance along `(dx, dy)` from an interior point to the boundary.
    fn ray_exit(&self, x: f64, y: f64, dx: f64, dy: f64) -> f64 {
        let tx = if dx > 0.0 {
            (self.max[0] - x) / dx
        } else if dx < 0.0 {
            (self.min[0] - x) / dx
        } else {
            f64::INFINITY
        };
        let ty = if dy > 0.0 {
            (self.max[1] - y) / dy
        } else if dy < 0.0 {
            (self.min[1] - y) / dy
        } else {
            f64::INFINITY
        };
        tx.min(ty).max(0.0)
    }
}

/// A single obstacle: a disk or a convex CCW polygon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Obstacle {
    Circle { center: [f64; 2], radius: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

impl Obstacle {
    pub fn circle(center: [f64; 2], radius: f64) -> Result<Self> {
        if radius <= 0.0 || !radius.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "circle radius must be positive, got {radius}"
            )));
        }
        Ok(Obstacle::Circle { center, radius })
    }

    /// Convex polygon from CCW-ordered vertices. Rejects fewer than three
    /// vertices, clockwise winding, and reflex corners.
    pub fn polygon(vertices: Vec<[f64; 2]>) -> Result<Self> {
        validate_polygon(&vertices)?;
        Ok(Obstacle::Polygon { vertices })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Obstacle::Circle { radius, .. } => {
                if *radius <= 0.0 || !radius.is_finite() {
                    return Err(Error::InvalidArgument(format!(
                        "circle radius must be positive, got {radius}"
                    )));
                }
                Ok(())
            }
            Obstacle::Polygon { vertices } => validate_polygon(vertices),
        }
    }

    /// Boundary-inclusive containment.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        match self {
            Obstacle::Circle { center, radius } => {
                let dx = x - center[0];
                let dy = y - center[1];
                dx * dx + dy * dy <= radius * radius
            }
            Obstacle::Polygon { vertices } => {
                let n = vertices.len();
                for i in 0..n {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
                    if cross < 0.0 {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// Smallest nonnegative ray parameter at which the ray from `(x, y)`
    /// along `(dx, dy)` meets the obstacle boundary.
    fn ray_hit(&self, x: f64, y: f64, dx: f64, dy: f64) -> Option<f64> {
        match self {
            Obstacle::Circle { center, radius } => {
                let ox = x - center[0];
                let oy = y - center[1];
                let b = dx * ox + dy * oy;
                let c = ox * ox + oy * oy - radius * radius;
                let disc = b * b - c;
                if disc < 0.0 {
                    return None;
                }
                let root = disc.sqrt();
                let t1 = -b - root;
                let t2 = -b + root;
                if t1 >= 0.0 {
                    Some(t1)
                } else if t2 >= 0.0 {
                    Some(t2)
                } else {
                    None
                }
            }
            Obstacle::Polygon { vertices } => {
                let n = vertices.len();
                let mut best: Option<f64> = None;
                for i in 0..n {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let ex = b[0] - a[0];
                    let ey = b[1] - a[1];
                    let denom = dx * ey - dy * ex;
                    if denom.abs() < 1e-300 {
                        continue; // parallel edge
                    }
                    let wx = a[0] - x;
                    let wy = a[1] - y;
                    let t = (wx * ey - wy * ex) / denom;
                    let s = (wx * dy - wy * dx) / denom;
                    if t >= 0.0 && (0.0..=1.0).contains(&s) {
                        best = Some(best.map_or(t, |cur: f64| cur.min(t)));
                    }
                }
                best
            }
        }
    }
}

fn validate_polygon(vertices: &[[f64; 2]]) -> Result<()> {
    if vertices.len() < 3 {
        return Err(Error::InvalidArgument(
            "polygon needs at least 3 vertices".into(),
        ));
    }
    let n = vertices.len();
    let mut area2 = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if cross < 0.0 {
            return Err(Error::InvalidArgument(
                "polygon must be convex with CCW winding".into(),
            ));
        }
        area2 += a[0] * b[1] - b[0] * a[1];
    }
    if area2 <= 0.0 {
        return Err(Error::InvalidArgument(
            "polygon is degenerate or wound clockwise".into(),
        ));
    }
    Ok(())
}

/// An immutable obstacle set with optional bounds. Points outside the
/// bounds count as collisions, and the bounds walls terminate clearance
/// rays.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub obstacles: Vec<Obstacle>,
    pub bounds: Option<Aabb>,
}

impl Environment {
    pub fn new(obstacles: Vec<Obstacle>, bounds: Option<Aabb>) -> Result<Self> {
        for o in &obstacles {
            o.validate()?;
        }
        Ok(Self { obstacles, bounds })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Whether the point collides: inside any obstacle, or outside the
    /// bounds when bounds are set.
    pub fn point_in_collision(&self, x: f64, y: f64) -> bool {
        if let Some(b) = &self.bounds {
            if !b.contains(x, y) {
                return true;
            }
        }
        self.obstacles.iter().any(|o| o.contains(x, y))
    }

    /// Tangential clearance: distance from the pose along its heading to
    /// the nearest obstacle boundary or bounds wall. Returns 0 if the pose
    /// is already in collision and infinity if nothing lies ahead.
    pub fn clearance_ray(&self, pose: &Pose) -> f64 {
        if self.point_in_collision(pose.x, pose.y) {
            return 0.0;
        }
        let dx = pose.theta.cos();
        let dy = pose.theta.sin();
        let mut best = f64::INFINITY;
        for o in &self.obstacles {
            if let Some(t) = o.ray_hit(pose.x, pose.y, dx, dy) {
                best = best.min(t);
            }
        }
        if let Some(b) = &self.bounds {
            best = best.min(b.ray_exit(pose.x, pose.y, dx, dy));
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn ray_hits_circle_head_on() {
        let env = Environment::new(vec![Obstacle::circle([3.0, 0.0], 1.0).unwrap()], None).unwrap();
        let d = env.clearance_ray(&Pose::new(0.0, 0.0, 0.0));
        assert!((d - 2.0).abs() < 1e-12, "d = {d}");
    }

    #[test]
    fn ray_facing_away_is_clear() {
        let env = Environment::new(vec![Obstacle::circle([3.0, 0.0], 1.0).unwrap()], None).unwrap();
        assert_eq!(env.clearance_ray(&Pose::new(0.0, 0.0, PI)), f64::INFINITY);
    }

    #[test]
    fn ray_hits_square_polygon() {
        let square =
            Obstacle::polygon(vec![[2.0, -0.5], [3.0, -0.5], [3.0, 0.5], [2.0, 0.5]]).unwrap();
        let env = Environment::new(vec![square], None).unwrap();
        let d = env.clearance_ray(&Pose::new(0.0, 0.0, 0.0));
        assert!((d - 2.0).abs() < 1e-12, "d = {d}");
    }

    #[test]
    fn pose_inside_obstacle_has_zero_clearance() {
        let env = Environment::new(vec![Obstacle::circle([0.0, 0.0], 1.0).unwrap()], None).unwrap();
        assert_eq!(env.clearance_ray(&Pose::new(0.2, 0.1, 0.7)), 0.0);
        assert!(env.point_in_collision(0.2, 0.1));
    }

    #[test]
    fn bounds_wall_terminates_ray_and_excludes_outside() {
        let env =
            Environment::new(vec![], Some(Aabb::new([-5.0, -5.0], [5.0, 5.0]).unwrap())).unwrap();
        let d = env.clearance_ray(&Pose::new(1.0, 0.0, 0.0));
        assert!((d - 4.0).abs() < 1e-12);
        assert!(env.point_in_collision(6.0, 0.0));
        assert!(!env.point_in_collision(4.9, 0.0));
    }

    #[test]
    fn polygon_validation() {
        assert!(Obstacle::polygon(vec![[0.0, 0.0], [1.0, 0.0]]).is_err());
        // Clockwise square rejected.
        assert!(Obstacle::polygon(vec![[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0],]).is_err());
        // Reflex (non-convex) polygon rejected.
        assert!(Obstacle::polygon(vec![
            [0.0, 0.0],
            [2.0, 0.0],
            [1.0, 0.5],
            [2.0, 2.0],
            [0.0, 2.0],
        ])
        .is_err());
        assert!(Obstacle::polygon(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0],]).is_ok());
    }

    #[test]
    fn oblique_ray_polygon_distance() {
        // Unit square [2,3]x[-0.5,0.5]; ray at 45 degrees from (1.5, -1.0)
        // enters through the bottom edge y=-0.5 at x=2.0, distance sqrt(2)/2.
        let square =
            Obstacle::polygon(vec![[2.0, -0.5], [3.0, -0.5], [3.0, 0.5], [2.0, 0.5]]).unwrap();
        let env = Environment::new(vec![square], None).unwrap();
        let d = env.clearance_ray(&Pose::new(1.5, -1.0, PI / 4.0));
        assert!(
            (d - std::f64::consts::SQRT_2 / 2.0).abs() < 1e-12,
            "d = {d}"
        );
    }

    #[test]
    fn empty_environment_never_collides() {
        let env = Environment::empty();
        assert!(!env.point_in_collision(100.0, -3.0));
        assert_eq!(env.clearance_ray(&Pose::new(0.0, 0.0, 1.0)), f64::INFINITY);
    }
}
