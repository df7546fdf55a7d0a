use super::{segments_cross, Parametric2, V2, V3};
use crate::error::{GeometryError, Result};
use crate::numeric::fd::differentiate;
use crate::numeric::interp::UniformGrid;
use crate::numeric::ode::rk4;
use crate::numeric::quad::ArcLength;

/// Plane curve sampled at n + 1 points uniformly in arc length, with its
/// signed curvature.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve {
    length: f64,
    s: Vec<f64>,
    points: Vec<V2>,
    heading: Vec<f64>,
    mu: Vec<f64>,
    periodic_extension: bool,
}

impl PlaneCurve {
    /// Integrates θ′ = μ, γ′ = (cos θ, sin θ) over [s0, s0 + l].
    pub fn from_mu(
        mu: &dyn Fn(f64) -> f64,
        s0: f64,
        length: f64,
        start: V2,
        heading: f64,
        n: usize,
        periodic_extension: bool,
    ) -> Result<Self> {
        let h = length / n as f64;
        let rhs = |s: f64, y: &[f64; 3]| [y[2].cos(), y[2].sin(), mu(s)];
        let states = rk4(&rhs, s0, [start.x, start.y, heading], h, n);
        if states.iter().flatten().any(|v| !v.is_finite()) {
            return Err(GeometryError::IntegrationFailure("non-finite plane development".into()));
        }
        let s: Vec<f64> = (0..=n).map(|i| s0 + i as f64 * h).collect();
        Ok(Self {
            length,
            mu: s.iter().map(|&x| mu(x)).collect(),
            s,
            points: states.iter().map(|y| V2::new(y[0], y[1])).collect(),
            heading: states.iter().map(|y| y[2]).collect(),
            periodic_extension,
        })
    }

    /// Development of a sampled curvature function; periodic grids are
    /// developed over one full period.
    pub fn from_mu_samples(mu: &[f64], grid: UniformGrid, start: V2, heading: f64) -> Result<Self> {
        let n = if grid.periodic { grid.len } else { grid.len - 1 };
        let length = grid.h * n as f64;
        Self::from_mu(&|s| grid.eval(mu, s), grid.start, length, start, heading, n, grid.periodic)
    }

    /// Samples a parametrized plane curve over [t0, t1] with exact curvature.
    pub fn from_parametric(curve: &dyn Parametric2, t0: f64, t1: f64, n: usize, periodic_extension: bool) -> Result<Self> {
        let map = ArcLength::new(|t| curve.jet(t)[1].norm(), t0, t1, (4 * n).max(256));
        let length = map.length();
        if length < 1e-12 {
            return Err(GeometryError::DegenerateCurve { length });
        }
        let h = length / n as f64;
        let mut out = Self {
            length,
            s: (0..=n).map(|i| i as f64 * h).collect(),
            points: Vec::with_capacity(n + 1),
            heading: Vec::with_capacity(n + 1),
            mu: Vec::with_capacity(n + 1),
            periodic_extension,
        };
        let mut prev: Option<f64> = None;
        for i in 0..=n {
            let t = map.param_at(i as f64 * h);
            let [c, d1, d2] = curve.jet(t);
            let mut th = d1.y.atan2(d1.x);
            if let Some(p) = prev {
                th += ((p - th) / std::f64::consts::TAU).round() * std::f64::consts::TAU;
            }
            prev = Some(th);
            out.points.push(c);
            out.heading.push(th);
            out.mu.push((d1.x * d2.y - d1.y * d2.x) / d1.norm().powi(3));
        }
        Ok(out)
    }

    /// Arc-length resampling of raw plane points; curvature by finite
    /// differences.
    pub fn resample_by_arclength(points: &[V2], closed: bool, n: usize) -> Result<Self> {
        let lifted: Vec<V3> = points.iter().map(|p| V3::new(p.x, p.y, 0.0)).collect();
        let (length, mut pts) = super::space::resample_points(&lifted, closed, n)?;
        if closed {
            pts.push(pts[0]);
        }
        let pts: Vec<V2> = pts.iter().map(|p| V2::new(p.x, p.y)).collect();
        let h = length / n as f64;
        let mut out = Self {
            length,
            s: (0..=n).map(|i| i as f64 * h).collect(),
            heading: Vec::new(),
            mu: Vec::new(),
            points: pts,
            periodic_extension: closed,
        };
        out.mu = out.measured_curvature();
        let d1 = differentiate(&out.points, h, 1, false);
        out.heading = d1.iter().map(|d| d.y.atan2(d.x)).collect();
        Ok(out)
    }

    pub fn length(&self) -> f64 {
        self.length
    }
    pub fn s(&self) -> &[f64] {
        &self.s
    }
    pub fn points(&self) -> &[V2] {
        &self.points
    }
    /// Tangent direction angle at each sample.
    pub fn headings(&self) -> &[f64] {
        &self.heading
    }
    pub fn mu(&self) -> &[f64] {
        &self.mu
    }
    pub fn periodic_extension(&self) -> bool {
        self.periodic_extension
    }

    /// Signed curvature recomputed from the sampled points.
    pub fn measured_curvature(&self) -> Vec<f64> {
        let h = self.length / (self.points.len() - 1) as f64;
        let d1 = differentiate(&self.points, h, 1, false);
        let d2 = differentiate(&self.points, h, 2, false);
        d1.iter().zip(&d2).map(|(a, b)| (a.x * b.y - a.y * b.x) / a.norm().powi(3)).collect()
    }

    /// |γ(end) − γ(start)|.
    pub fn endpoint_gap(&self) -> f64 {
        (self.points[self.points.len() - 1] - self.points[0]).norm()
    }

    /// True when no two non-adjacent sample segments cross.
    pub fn is_simple(&self) -> bool {
        let p = &self.points;
        let m = p.len() - 1;
        let bbox = |i: usize| {
            let (a, b) = (p[i], p[i + 1]);
            (a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y))
        };
        let boxes: Vec<_> = (0..m).map(bbox).collect();
        for i in 0..m {
            for j in i + 2..m {
                if self.periodic_extension && i == 0 && j == m - 1 {
                    continue;
                }
                let (a, b) = (boxes[i], boxes[j]);
                if a.1 < b.0 || b.1 < a.0 || a.3 < b.2 || b.3 < a.2 {
                    continue;
                }
                if segments_cross(p[i], p[i + 1], p[j], p[j + 1]) {
                    return false;
                }
            }
        }
        true
    }
}
