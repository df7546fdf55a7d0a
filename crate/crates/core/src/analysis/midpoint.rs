use crate::config::Tolerances;
use crate::curve::symmetry::best_fit_plane;
use crate::error::{GeometryError, Result};
use crate::numeric::fd::differentiate;
use crate::strip::DevelopableStrip;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MidpointVerdict {
    NIs4,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MidpointReport {
    pub verdict: MidpointVerdict,
    pub kappa_prime: f64,
    pub mu_prime: f64,
    pub threshold: f64,
}

/// Sufficient test for four congruence classes: κ′ and μ′ both non-zero at
/// the midpoint of a non-planar crease.
pub fn midpoint_criterion(f: &DevelopableStrip, tol: &Tolerances) -> Result<MidpointReport> {
    let c = f.crease();
    if c.is_closed() {
        return Err(GeometryError::NotInterval);
    }
    let l = c.length();
    let kbar = c.mean_kappa();
    let (_, _, plane_residual) = best_fit_plane(c.points());
    let max_tau = c.tau().iter().fold(0.0f64, |m, t| m.max(t.abs()));
    if plane_residual < tol.plane * l && max_tau < tol.tau * kbar {
        return Err(GeometryError::PlanarCurve);
    }
    let h = c.step();
    let dk = differentiate(c.kappa(), h, 1, false);
    let dm = differentiate(f.mu(), h, 1, false);
    let g = c.grid();
    let (kappa_prime, mu_prime) = (g.eval(&dk, 0.0), g.eval(&dm, 0.0));
    let threshold = tol.deriv * kbar / l;
    let verdict = if kappa_prime.abs() > threshold && mu_prime.abs() > threshold {
        MidpointVerdict::NIs4
    } else {
        MidpointVerdict::Inconclusive
    };
    Ok(MidpointReport { verdict, kappa_prime, mu_prime, threshold })
}
