use super::{sample_band, DevelopableStrip, StripMesh};
use crate::curve::{PlaneCurve, V2};
use crate::error::Result;
use std::f64::consts::PI;

/// Curved folding: the strip on v ≥ 0 glued to its dual on v < 0.
#[derive(Debug, Clone, PartialEq)]
pub struct OrigamiMap {
    pub upper: DevelopableStrip,
    pub lower: DevelopableStrip,
    pub crease_pattern: PlaneCurve,
    /// β of the upper strip.
    pub beta_left: Vec<f64>,
    /// π − β of the dual.
    pub beta_right: Vec<f64>,
}

pub fn build_origami_map(strip: &DevelopableStrip) -> Result<OrigamiMap> {
    let lower = strip.dual();
    let crease_pattern = PlaneCurve::from_mu_samples(strip.mu(), strip.grid(), V2::zeros(), 0.0)?;
    Ok(OrigamiMap {
        beta_left: strip.beta().to_vec(),
        beta_right: lower.beta().iter().map(|b| PI - b).collect(),
        upper: strip.clone(),
        lower,
        crease_pattern,
    })
}

impl OrigamiMap {
    /// Swaps the roles of the strip and its dual.
    pub fn swapped(&self) -> Result<OrigamiMap> {
        build_origami_map(&self.lower)
    }

    /// Meshes of the two halves; each gets `(n_v + 1) / 2` ruling samples.
    pub fn meshes(&self, n_v: usize) -> Result<(StripMesh, StripMesh)> {
        let half = n_v.div_ceil(2).max(2);
        let eps = self.upper.width();
        Ok((sample_band(&self.upper, 0.0, eps, half)?, sample_band(&self.lower, -eps, 0.0, half)?))
    }
}
