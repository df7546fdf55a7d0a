//! Arc-length sampled curves in the plane and in space.

mod plane;
mod space;
pub mod symmetry;

pub use plane::PlaneCurve;
pub use space::{Frame, SpaceCurve};

use nalgebra::{Vector2, Vector3};
use serde::{Deserialize, Serialize};

pub type V3 = Vector3<f64>;
pub type V2 = Vector2<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// [−l/2, l/2], sampled at n + 1 points.
    Interval,
    /// ℝ / lℤ, sampled at n points of [0, l).
    Torus,
}

/// A regular space curve with derivatives up to third order.
pub trait Parametric3: Sync {
    fn jet(&self, t: f64) -> [V3; 4];
}

/// A regular plane curve with derivatives up to second order.
pub trait Parametric2: Sync {
    fn jet(&self, t: f64) -> [V2; 3];
}

/// Plane curve lifted to z = 0.
pub struct Lifted<'a>(pub &'a dyn Parametric2);

impl Parametric3 for Lifted<'_> {
    fn jet(&self, t: f64) -> [V3; 4] {
        let j = self.0.jet(t);
        // torsion of a plane curve vanishes, so the third derivative is irrelevant
        let up = |v: V2| V3::new(v.x, v.y, 0.0);
        [up(j[0]), up(j[1]), up(j[2]), V3::zeros()]
    }
}

/// Sample positions for `n` intervals on the given domain.
pub fn arc_grid(domain: Domain, length: f64, n: usize) -> Vec<f64> {
    let h = length / n as f64;
    match domain {
        Domain::Interval => (0..=n).map(|i| -0.5 * length + i as f64 * h).collect(),
        Domain::Torus => (0..n).map(|i| i as f64 * h).collect(),
    }
}

/// Segment-segment intersection in the plane, excluding shared endpoints.
pub(crate) fn segments_cross(a0: V2, a1: V2, b0: V2, b1: V2) -> bool {
    let cross = |u: V2, v: V2| u.x * v.y - u.y * v.x;
    let r = a1 - a0;
    let s = b1 - b0;
    let denom = cross(r, s);
    if denom.abs() < 1e-300 {
        return false;
    }
    let t = cross(b0 - a0, s) / denom;
    let u = cross(b0 - a0, r) / denom;
    (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)
}
