//! Developable strips along a crease.

mod mesh;
mod origami;

pub use mesh::{
    directed_distance, hausdorff, meshes_meet_only_along, sample_band, sample_mesh, strips_intersect_only_along_crease,
    IntersectionReport, MeshQuality, StripMesh,
};
pub use origami::{build_origami_map, OrigamiMap};

use crate::config::Tolerances;
use crate::curve::{Domain, PlaneCurve, SpaceCurve, V3};
use crate::error::{GeometryError, Result};
use crate::numeric::fd::differentiate;
use crate::numeric::interp::UniformGrid;
use std::f64::consts::FRAC_PI_2;

/// f(s, v) = c(s) + v·ξ(s) with ξ = cos β e + sin β (cos α n + sin α b).
#[derive(Debug, Clone, PartialEq)]
pub struct DevelopableStrip {
    crease: SpaceCurve,
    alpha: Vec<f64>,
    alpha_prime: Vec<f64>,
    beta: Vec<f64>,
    ruling: Vec<V3>,
    conormal: Vec<V3>,
    mu: Vec<f64>,
    width: f64,
}

impl DevelopableStrip {
    /// Strip with first angular function `alpha`, evaluated at the native
    /// parameter of each crease sample.
    pub fn build(crease: SpaceCurve, alpha: &dyn Fn(f64) -> f64, width: f64, tol: &Tolerances) -> Result<Self> {
        let a: Vec<f64> = crease.native().iter().map(|&t| alpha(t)).collect();
        Self::from_alpha(crease, a, width, tol)
    }

    /// Strip from sampled first angular function values.
    pub fn from_alpha(crease: SpaceCurve, alpha: Vec<f64>, width: f64, tol: &Tolerances) -> Result<Self> {
        let mu = crease.kappa().iter().zip(&alpha).map(|(k, a)| k * a.cos()).collect();
        Self::assemble(crease, alpha, mu, width, tol)
    }

    /// Strip whose geodesic curvature is that of `generator` rescaled by
    /// k = l_crease / l_generator, with positive α solving κ cos α = μ.
    /// Closed creases read the generator periodically.
    pub fn from_generator(crease: SpaceCurve, generator: &PlaneCurve, width: f64, tol: &Tolerances) -> Result<Self> {
        let k = crease.length() / generator.length();
        let ng = generator.mu().len() - 1;
        let closed = crease.is_closed();
        let grid = UniformGrid { start: 0.0, h: generator.length() / ng as f64, len: if closed { ng } else { ng + 1 }, periodic: closed };
        let offset = if closed { 0.0 } else { 0.5 * crease.length() };
        let gmu = &generator.mu()[..grid.len];
        let mu: Vec<f64> = crease.s().iter().map(|s| grid.eval(gmu, (s + offset) / k) / k).collect();
        let kappa = crease.kappa();
        if let Some(i) = (0..mu.len()).find(|&i| !(mu[i] > 0.0 && mu[i] < kappa[i] - tol.kappa)) {
            return Err(GeometryError::IncompatibleCurve { s: crease.s()[i], kappa: kappa[i], mu: mu[i] });
        }
        let alpha = mu.iter().zip(kappa).map(|(m, k)| (m / k).acos()).collect();
        Self::assemble(crease, alpha, mu, width, tol)
    }

    /// As `from_alpha`, but keeps a caller-supplied geodesic curvature array
    /// (used when μ is prescribed and α is solved from it).
    pub(crate) fn assemble(crease: SpaceCurve, alpha: Vec<f64>, mu: Vec<f64>, width: f64, tol: &Tolerances) -> Result<Self> {
        if alpha.len() != crease.len() {
            return Err(GeometryError::GridMismatch(format!("{} angles for {} samples", alpha.len(), crease.len())));
        }
        for (i, &a) in alpha.iter().enumerate() {
            if !(a.abs() > tol.alpha && a.abs() < FRAC_PI_2 - tol.alpha) {
                return Err(GeometryError::AlphaOutOfRange { s: crease.s()[i], alpha: a });
            }
        }
        let alpha_prime = differentiate(&alpha, crease.step(), 1, crease.is_closed());
        let m = crease.len();
        let mut beta = Vec::with_capacity(m);
        let mut ruling = Vec::with_capacity(m);
        let mut conormal = Vec::with_capacity(m);
        for i in 0..m {
            let (sa, ca) = alpha[i].sin_cos();
            let y = crease.kappa()[i] * sa;
            let x = alpha_prime[i] + crease.tau()[i];
            // cot β = x / y with β in (0, π)
            let b = y.abs().atan2(x * y.signum());
            let nn = crease.normals()[i] * ca + crease.binormals()[i] * sa;
            let (sb, cb) = b.sin_cos();
            beta.push(b);
            ruling.push((crease.tangents()[i] * cb + nn * sb).normalize());
            conormal.push(nn);
        }
        Ok(Self { crease, alpha, alpha_prime, beta, ruling, conormal, mu, width })
    }

    pub fn crease(&self) -> &SpaceCurve {
        &self.crease
    }
    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }
    pub fn alpha_prime(&self) -> &[f64] {
        &self.alpha_prime
    }
    pub fn beta(&self) -> &[f64] {
        &self.beta
    }
    pub fn ruling(&self) -> &[V3] {
        &self.ruling
    }
    pub fn conormal(&self) -> &[V3] {
        &self.conormal
    }
    pub fn mu(&self) -> &[f64] {
        &self.mu
    }
    /// Half-width ε of the band used for meshing.
    pub fn width(&self) -> f64 {
        self.width
    }
    pub fn with_width(mut self, width: f64) -> Self {
        self.width = width;
        self
    }
    pub fn domain(&self) -> Domain {
        self.crease.domain()
    }
    pub fn grid(&self) -> UniformGrid {
        self.crease.grid()
    }

    /// +1 or −1 when α keeps one sign, 0 otherwise.
    pub fn alpha_sign(&self) -> i8 {
        if self.alpha.iter().all(|&a| a > 0.0) {
            1
        } else if self.alpha.iter().all(|&a| a < 0.0) {
            -1
        } else {
            0
        }
    }

    pub fn max_mu(&self) -> f64 {
        self.mu.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// max μ < min κ − tol_kappa.
    pub fn is_admissible(&self, tol: &Tolerances) -> bool {
        self.max_mu() < self.crease.min_kappa() - tol.kappa
    }

    pub fn require_admissible(&self, tol: &Tolerances) -> Result<()> {
        if self.is_admissible(tol) {
            Ok(())
        } else {
            Err(GeometryError::NotAdmissible { max_mu: self.max_mu(), min_kappa: self.crease.min_kappa() })
        }
    }

    /// |H| along the crease: (κ² sin²α + (α′+τ)²) / (2κ|sin α|).
    pub fn mean_curvature_along_crease(&self) -> Vec<f64> {
        (0..self.alpha.len())
            .map(|i| {
                let k = self.crease.kappa()[i];
                let sa = self.alpha[i].sin();
                let x = self.alpha_prime[i] + self.crease.tau()[i];
                (k * k * sa * sa + x * x) / (2.0 * k * sa.abs())
            })
            .collect()
    }

    /// max |cot β · κ sin α − (α′ + τ)| over interior samples.
    pub fn beta_residual(&self) -> f64 {
        let m = self.alpha.len();
        let range = if self.crease.is_closed() { 0..m } else { 1..m - 1 };
        range
            .map(|i| {
                let b = self.beta[i];
                let lhs = b.cos() / b.sin() * self.crease.kappa()[i] * self.alpha[i].sin();
                (lhs - self.alpha_prime[i] - self.crease.tau()[i]).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Dual strip: α ↦ −α on the same crease.
    pub fn dual(&self) -> Self {
        let alpha = self.alpha.iter().map(|a| -a).collect();
        Self::assemble(self.crease.clone(), alpha, self.mu.clone(), self.width, &Tolerances { alpha: 0.0, ..Default::default() })
            .expect("negated angles stay in range")
    }

    /// Reverse f♯(u, v) = f(−u, v); defined on interval domains only.
    pub fn reversed(&self) -> Result<Self> {
        if self.crease.is_closed() {
            return Err(GeometryError::TorusDomain);
        }
        let crease = self.crease.reversed();
        let m = self.alpha.len();
        let alpha = (0..m).map(|i| -self.alpha[m - 1 - i]).collect();
        let mu = (0..m).map(|i| self.mu[m - 1 - i]).collect();
        Self::assemble(crease, alpha, mu, self.width, &Tolerances { alpha: 0.0, ..Default::default() })
    }

    /// f(s, v), interpolated between samples.
    pub fn point_at(&self, s: f64, v: f64) -> V3 {
        let g = self.grid();
        if let Some(i) = g.exact_index(s) {
            return self.crease.points()[i] + self.ruling[i] * v;
        }
        g.eval(self.crease.points(), s) + g.eval(&self.ruling, s).normalize() * v
    }

    pub fn point(&self, i: usize, v: f64) -> V3 {
        self.crease.points()[i] + self.ruling[i] * v
    }

    /// Uniform rescaling of all lengths.
    pub fn scaled(&self, lambda: f64, tol: &Tolerances) -> Result<Self> {
        Self::from_alpha(self.crease.scaled(lambda), self.alpha.clone(), self.width * lambda, tol)
    }
}
