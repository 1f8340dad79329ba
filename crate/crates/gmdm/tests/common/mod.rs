//! Shared test oracles, independent of the library's solver path.
//!
//! - [`integrate_rk4`]: fixed-step RK4 integration of the unicycle
//!   kinematics, used to validate the closed-form motion primitives.
//! - [`dubins`]: a classic single-speed Dubins solver re-derived from the
//!   standard normalized-coordinate formulas, used to validate the
//!   constant-speed reduction of the multi-speed model.

#![allow(dead_code)]

use gmdm::se2::{ControlInput, Pose};

/// RK4 integration of `x' = v cos(theta), y' = v sin(theta),
/// `theta' = omega` under a constant input.
pub fn integrate_rk4(p: &Pose, u: &ControlInput, tau: f64, step: f64) -> Pose {
    assert!(step > 0.0 && tau >= 0.0);
    let f = |theta: f64| (u.v * theta.cos(), u.v * theta.sin(), u.omega);
    let (mut x, mut y, mut theta) = (p.x, p.y, p.theta);
    let mut remaining = tau;
    while remaining > 0.0 {
        let h = remaining.min(step);
        let (k1x, k1y, k1t) = f(theta);
        let (k2x, k2y, k2t) = f(theta + 0.5 * h * k1t);
        let (k3x, k3y, k3t) = f(theta + 0.5 * h * k2t);
        let (k4x, k4y, k4t) = f(theta + h * k3t);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        theta += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
        remaining -= h;
    }
    Pose::new(x, y, theta)
}

pub mod dubins {
    //! Classic constant-speed Dubins paths in normalized coordinates
    //! (distances scaled by the turning radius). Each word solver returns
    //! the three normalized segment lengths `(t, p, q)`.

    use std::f64::consts::PI;

    const TWO_PI: f64 = 2.0 * PI;

    fn mod2pi(x: f64) -> f64 {
        let mut r = x - TWO_PI * (x / TWO_PI).floor();
        if r >= TWO_PI {
            r -= TWO_PI;
        }
        if r < 0.0 {
            r += TWO_PI;
        }
        r
    }

    #[derive(Debug, Clone, Copy, PartialEq)]
    pub struct Word {
        pub name: &'static str,
        pub t: f64,
        pub p: f64,
        pub q: f64,
    }

    impl Word {
        pub fn length(&self) -> f64 {
            self.t + self.p + self.q
        }
    }

    fn lsl(alpha: f64, beta: f64, d: f64) -> Option<Word> {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let c_ab = (alpha - beta).cos();
        let p_sq = 2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sa - sb);
        if p_sq < 0.0 {
            return None;
        }
        let tmp = (cb - ca).atan2(d + sa - sb);
        Some(Word {
            name: "LSL",
            t: mod2pi(-alpha + tmp),
            p: p_sq.sqrt(),
            q: mod2pi(beta - tmp),
        })
    }

    fn rsr(alpha: f64, beta: f64, d: f64) -> Option<Word> {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let c_ab = (alpha - beta).cos();
        let p_sq = 2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sb - sa);
        if p_sq < 0.0 {
            return None;
        }
        let tmp = (ca - cb).atan2(d - sa + sb);
        Some(Word {
            name: "RSR",
            t: mod2pi(alpha - tmp),
            p: p_sq.sqrt(),
            q: mod2pi(-beta + tmp),
        })
    }

    fn lsr(alpha: f64, beta: f64, d: f64) -> Option<Word> {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let c_ab = (alpha - beta).cos();
        let p_sq = -2.0 + d * d + 2.0 * c_ab + 2.0 * d * (sa + sb);
        if p_sq < 0.0 {
            return None;
        }
        let p = p_sq.sqrt();
        let tmp = (-ca - cb).atan2(d + sa + sb) - (-2.0f64).atan2(p);
        Some(Word {
            name: "LSR",
            t: mod2pi(-alpha + tmp),
            p,
            q: mod2pi(-mod2pi(beta) + tmp),
        })
    }

    fn rsl(alpha: f64, beta: f64, d: f64) -> Option<Word> {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let c_ab = (alpha - beta).cos();
        let p_sq = d * d - 2.0 + 2.0 * c_ab - 2.0 * d * (sa + sb);
        if p_sq < 0.0 {
            return None;
        }
        let p = p_sq.sqrt();
        let tmp = (ca + cb).atan2(d - sa - sb) - 2.0f64.atan2(p);
        Some(Word {
            name: "RSL",
            t: mod2pi(alpha - tmp),
            p,
            q: mod2pi(beta - tmp),
        })
    }

    fn rlr(alpha: f64, beta: f64, d: f64) -> Option<Word> {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let c_ab = (alpha - beta).cos();
        let tmp = (6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sa - sb)) / 8.0;
        if tmp.abs() > 1.0 {
            return None;
        }
        let p = mod2pi(TWO_PI - tmp.acos());
        let phi = (ca - cb).atan2(d - sa + sb);
        let t = mod2pi(alpha - phi + mod2pi(p / 2.0));
        Some(Word {
            name: "RLR",
            t,
            p,
            q: mod2pi(alpha - beta - t + mod2pi(p)),
        })
    }

    fn lrl(alpha: f64, beta: f64, d: f64) -> Option<Word> {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let c_ab = (alpha - beta).cos();
        let tmp = (6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sb - sa)) / 8.0;
        if tmp.abs() > 1.0 {
            return None;
        }
        let p = mod2pi(TWO_PI - tmp.acos());
        let phi = (cb - ca).atan2(d + sa - sb);
        let t = mod2pi(-alpha + phi + mod2pi(p / 2.0));
        Some(Word {
            name: "LRL",
            t,
            p,
            q: mod2pi(mod2pi(beta) - alpha - t + mod2pi(p)),
        })
    }

    /// Normalized word signs for forward replay: +1 left, -1 right, 0 straight.
    fn signs(name: &str) -> [f64; 3] {
        match name {
            "LSL" => [1.0, 0.0, 1.0],
            "RSR" => [-1.0, 0.0, -1.0],
            "LSR" => [1.0, 0.0, -1.0],
            "RSL" => [-1.0, 0.0, 1.0],
            "RLR" => [-1.0, 1.0, -1.0],
            "LRL" => [1.0, -1.0, 1.0],
            _ => unreachable!(),
        }
    }

    /// Replay a normalized word from the normalized start `(0, 0, alpha)`
    /// and check it reaches `(d, 0, beta)`. Guards against porting slips.
    fn replays(word: &Word, alpha: f64, beta: f64, d: f64) -> bool {
        let s = signs(word.name);
        let (mut x, mut y, mut theta) = (0.0f64, 0.0f64, alpha);
        for (len, sign) in [word.t, word.p, word.q].into_iter().zip(s) {
            if sign == 0.0 {
                x += len * theta.cos();
                y += len * theta.sin();
            } else {
                let theta1 = theta + sign * len;
                x += sign * (theta1.sin() - theta.sin());
                y += sign * (theta.cos() - theta1.cos());
                theta = theta1;
            }
        }
        let pos_ok = (x - d).hypot(y) < 1e-6 * d.max(1.0);
        let ang = mod2pi(theta - beta);
        pos_ok && (ang < 1e-6 || TWO_PI - ang < 1e-6)
    }

    /// All feasible words for the pose pair, as normalized segment lengths.
    pub fn all_words(q0: (f64, f64, f64), q1: (f64, f64, f64), rho: f64) -> Vec<Word> {
        assert!(rho > 0.0);
        let dx = q1.0 - q0.0;
        let dy = q1.1 - q0.1;
        let big_d = dx.hypot(dy);
        let d = big_d / rho;
        let psi = if big_d > 0.0 { dy.atan2(dx) } else { 0.0 };
        let alpha = mod2pi(q0.2 - psi);
        let beta = mod2pi(q1.2 - psi);
        [lsl, rsr, lsr, rsl, rlr, lrl]
            .iter()
            .filter_map(|f| f(alpha, beta, d))
            .filter(|w| replays(w, alpha, beta, d))
            .collect()
    }

    /// Shortest-path length between the two poses (meters).
    pub fn shortest_length(q0: (f64, f64, f64), q1: (f64, f64, f64), rho: f64) -> Option<f64> {
        all_words(q0, q1, rho)
            .iter()
            .map(|w| w.length() * rho)
            .min_by(f64::total_cmp)
    }
}

/// Deterministic xorshift-based generator for bulk randomized tests where
/// shrinking is not needed.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn pose(&mut self, extent: f64) -> Pose {
        Pose::new(
            self.range(-extent, extent),
            self.range(-extent, extent),
            self.range(0.0, std::f64::consts::TAU),
        )
    }
}
