//! Ambient symmetries of sampled curves.

use super::{SpaceCurve, V3};
use crate::config::Tolerances;
use crate::numeric::fd::differentiate;
use crate::numeric::interp::UniformGrid;
use crate::numeric::procrustes::{fit, residual, Isometry3};
use nalgebra::{Matrix3, SymmetricEigen};
use serde::{Deserialize, Serialize};

/// Reparametrization s ↦ σ·s + d.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParameterAction {
    pub sigma: i8,
    pub shift: f64,
}

impl ParameterAction {
    pub fn apply(&self, s: f64) -> f64 {
        self.sigma as f64 * s + self.shift
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSymmetry {
    pub isometry: Isometry3,
    pub action: ParameterAction,
    pub residual: f64,
}

impl CurveSymmetry {
    pub fn sign(&self) -> i8 {
        self.isometry.sign()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSymmetryReport {
    /// Non-trivial symmetries. Empty when `infinite` is set.
    pub symmetries: Vec<CurveSymmetry>,
    pub is_planar: bool,
    /// (point, unit normal) of the best-fit plane when planar.
    pub plane: Option<(V3, V3)>,
    pub is_circle: bool,
    /// Set for circles, whose symmetry group is not finite.
    pub infinite: bool,
    pub has_positive_symmetry: bool,
    pub has_negative_symmetry: bool,
    pub has_trivial_symmetry: bool,
    pub plane_residual: f64,
}

impl CurveSymmetryReport {
    pub fn has_nontrivial(&self) -> bool {
        self.infinite || !self.symmetries.is_empty()
    }

    /// Reflection in the plane of a planar curve.
    pub fn trivial_symmetry(&self) -> Option<Isometry3> {
        self.plane.map(|(p, nrm)| Isometry3::reflection(&p, &nrm))
    }
}

/// Least-squares plane: (centroid, unit normal, max |distance|).
pub fn best_fit_plane(points: &[V3]) -> (V3, V3, f64) {
    let c = points.iter().sum::<V3>() / points.len() as f64;
    let mut cov = Matrix3::zeros();
    for p in points {
        let d = p - c;
        cov += d * d.transpose();
    }
    let eig = SymmetricEigen::new(cov);
    let k = (0..3).min_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j])).unwrap();
    let normal = eig.eigenvectors.column(k).into_owned().normalize();
    let res = points.iter().map(|p| (p - c).dot(&normal).abs()).fold(0.0, f64::max);
    (c, normal, res)
}

fn wrap(d: f64, period: f64) -> f64 {
    let r = d.rem_euclid(period);
    if period - r < 1e-12 * period { 0.0 } else { r }
}

/// Candidate reparametrizations φ with `b(φ(s)) = a(s)`, both sampled on the
/// same grid. On a torus these come from the preimages under `b` of one
/// regular value of `a`; on an interval only s ↦ ±s are possible.
pub fn candidate_matches(a: &[f64], b: &[f64], grid: UniformGrid) -> Vec<ParameterAction> {
    if !grid.periodic {
        return vec![ParameterAction { sigma: 1, shift: 0.0 }, ParameterAction { sigma: -1, shift: 0.0 }];
    }
    let n = grid.len;
    let h = grid.h;
    let period = grid.period();
    let da = differentiate(a, h, 1, true);
    let db = differentiate(b, h, 1, true);
    let i0 = (0..n).max_by(|&i, &j| da[i].abs().total_cmp(&da[j].abs())).unwrap();
    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1e-300);
    if da[i0].abs() * period < 1e-9 * scale {
        return Vec::new();
    }
    let r = a[i0];
    let s0 = grid.start + i0 as f64 * h;
    let g = |s: f64| grid.eval(b, s) - r;
    let mut out = Vec::new();
    for j in 0..n {
        let (x0, x1) = (grid.start + j as f64 * h, grid.start + (j + 1) as f64 * h);
        let (g0, g1) = (b[j] - r, b[(j + 1) % n] - r);
        if g0 != 0.0 && g0 * g1 >= 0.0 {
            continue;
        }
        let root = if g0 == 0.0 {
            x0
        } else {
            let (mut lo, mut hi, mut glo) = (x0, x1, g0);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let gm = g(mid);
                if gm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (gm < 0.0) == (glo < 0.0) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        let slope = grid.eval(&db, root);
        let sigma: i8 = if (slope > 0.0) == (da[i0] > 0.0) { 1 } else { -1 };
        let shift = wrap(root - sigma as f64 * s0, period);
        if !out.iter().any(|c: &ParameterAction| {
            c.sigma == sigma && {
                let d = (c.shift - shift).abs();
                d.min(period - d) < 1e-3 * h
            }
        }) {
            out.push(ParameterAction { sigma, shift });
        }
    }
    out
}

/// sup_s |b(φ(s)) − a(s)|.
pub fn match_residual(a: &[f64], b: &[f64], grid: UniformGrid, phi: ParameterAction) -> f64 {
    (0..grid.len)
        .map(|i| {
            let s = grid.start + i as f64 * grid.h;
            (grid.eval(b, phi.apply(s)) - a[i]).abs()
        })
        .fold(0.0, f64::max)
}

fn is_identity(phi: &ParameterAction, period: f64) -> bool {
    phi.sigma == 1 && (phi.shift.abs() < 1e-9 * period || (period - phi.shift).abs() < 1e-9 * period)
}

/// Finds the symmetries of `curve` by registering matched samples under
/// every candidate reparametrization.
pub fn detect_curve_symmetries(curve: &SpaceCurve, tol: &Tolerances) -> CurveSymmetryReport {
    let l = curve.length();
    let kbar = curve.mean_kappa();
    let (centroid, normal, plane_residual) = best_fit_plane(curve.points());
    let max_tau = curve.tau().iter().fold(0.0f64, |m, t| m.max(t.abs()));
    let is_planar = plane_residual < tol.plane * l && max_tau < tol.tau * kbar;
    let kappa_var = curve.kappa().iter().fold(0.0f64, |m, k| m.max((k - kbar).abs()));
    let is_circle = curve.is_closed() && is_planar && kappa_var < tol.kappa_var * kbar;
    let plane = is_planar.then_some((centroid, normal));
    let mut report = CurveSymmetryReport {
        symmetries: Vec::new(),
        is_planar,
        plane,
        is_circle,
        infinite: is_circle,
        has_positive_symmetry: is_circle,
        has_negative_symmetry: is_circle,
        has_trivial_symmetry: is_planar,
        plane_residual,
    };
    if is_circle {
        return report;
    }
    let grid = curve.grid();
    let period = grid.period();
    let mut candidates: Vec<ParameterAction> = candidate_matches(curve.kappa(), curve.kappa(), grid);
    if curve.is_closed() && candidates.is_empty() {
        candidates = candidate_matches(curve.tau(), curve.tau(), grid);
    }
    candidates.retain(|c| !is_identity(c, period));
    let source = curve.points();
    for phi in candidates {
        if curve.is_closed() && match_residual(curve.kappa(), curve.kappa(), grid, phi) > 1e-3 * kbar {
            continue;
        }
        let target: Vec<V3> = curve.s().iter().map(|&s| grid.eval(source, phi.apply(s))).collect();
        let f = fit(source, &target, true);
        if f.max_residual >= tol.sym * l {
            continue;
        }
        report.symmetries.push(CurveSymmetry { isometry: f.isometry, action: phi, residual: f.max_residual });
        if let Some((p, nrm)) = plane {
            let t0 = Isometry3::reflection(&p, &nrm);
            let other = f.isometry.compose(&t0);
            let r = residual(&other, source, &target);
            if r < tol.sym * l {
                report.symmetries.push(CurveSymmetry { isometry: other, action: phi, residual: r });
            }
        }
    }
    report.has_positive_symmetry = report.symmetries.iter().any(|s| s.sign() > 0);
    report.has_negative_symmetry = report.symmetries.iter().any(|s| s.sign() < 0);
    report
}
