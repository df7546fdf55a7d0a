use serde::{Deserialize, Serialize};

/// Numerical tolerances. Length-like entries are relative and get scaled by
/// the curve length where noted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Arc-length consistency, times l.
    pub len: f64,
    pub frame: f64,
    /// Planarity test on torsion, relative to mean curvature.
    pub tau: f64,
    pub kappa: f64,
    /// Registration residual, times l.
    pub sym: f64,
    pub ode: f64,
    pub periodic: f64,
    pub beta: f64,
    pub alpha: f64,
    /// Angle defect per vertex, radians.
    pub flat: f64,
    /// Best-fit plane residual, times l.
    pub plane: f64,
    /// Circle test on curvature, relative to mean curvature.
    pub kappa_var: f64,
    /// Function symmetry residual, relative to sup |mu|.
    pub musym: f64,
    /// Midpoint derivative threshold, times mean curvature / l.
    pub deriv: f64,
    pub mean_h: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            len: 1e-6,
            frame: 1e-8,
            tau: 1e-5,
            kappa: 1e-9,
            sym: 1e-4,
            ode: 1e-5,
            periodic: 1e-5,
            beta: 1e-6,
            alpha: 1e-9,
            flat: 1e-6,
            plane: 1e-7,
            kappa_var: 1e-6,
            musym: 1e-6,
            deriv: 1e-6,
            mean_h: 1e-6,
        }
    }
}

/// Discretization settings shared by every stage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Settings {
    /// Number of arc-length intervals along the crease.
    pub resolution: usize,
    /// Strip half-width as a fraction of the crease length.
    pub width_fraction: f64,
    /// Number of ruling samples across the band.
    pub rulings: usize,
    pub tol: Tolerances,
}

impl Default for Settings {
    fn default() -> Self {
        Self { resolution: 2048, width_fraction: 0.05, rulings: 9, tol: Tolerances::default() }
    }
}

impl Settings {
    pub fn with_resolution(mut self, n: usize) -> Self {
        self.resolution = n;
        self
    }
}
