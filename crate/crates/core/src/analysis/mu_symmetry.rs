use crate::config::Tolerances;
use crate::curve::symmetry::{candidate_matches, match_residual, ParameterAction};
use crate::curve::Domain;
use crate::numeric::interp::UniformGrid;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionSymmetryReport {
    pub domain: Domain,
    pub has_symmetry: bool,
    /// Constant function on a torus: every shift is a symmetry.
    pub infinite: bool,
    pub actions: Vec<ParameterAction>,
    /// Sup-norm mismatch of the best candidate; `None` when there was no
    /// candidate at all.
    pub residual: Option<f64>,
}

/// Symmetries s ↦ σs + d of a sampled function, excluding the identity.
/// On an interval only s ↦ −s is a candidate.
pub fn mu_symmetry(mu: &[f64], grid: UniformGrid, tol: &Tolerances) -> FunctionSymmetryReport {
    let scale = mu.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1e-300);
    let limit = tol.musym * scale;
    if !grid.periodic {
        let n = mu.len() - 1;
        let residual = (0..=n).map(|i| (mu[i] - mu[n - i]).abs()).fold(0.0, f64::max);
        let has = residual < limit;
        return FunctionSymmetryReport {
            domain: Domain::Interval,
            has_symmetry: has,
            infinite: false,
            actions: if has { vec![ParameterAction { sigma: -1, shift: 0.0 }] } else { Vec::new() },
            residual: Some(residual),
        };
    }
    let mean = mu.iter().sum::<f64>() / mu.len() as f64;
    let spread = mu.iter().fold(0.0f64, |m, x| m.max((x - mean).abs()));
    if spread < limit {
        return FunctionSymmetryReport { domain: Domain::Torus, has_symmetry: true, infinite: true, actions: Vec::new(), residual: Some(spread) };
    }
    let period = grid.period();
    let mut actions = Vec::new();
    let mut best: Option<f64> = None;
    for phi in candidate_matches(mu, mu, grid) {
        if phi.sigma == 1 && (phi.shift < 1e-9 * period || period - phi.shift < 1e-9 * period) {
            continue;
        }
        let r = match_residual(mu, mu, grid, phi);
        best = Some(best.map_or(r, |b: f64| b.min(r)));
        if r < limit {
            actions.push(phi);
        }
    }
    FunctionSymmetryReport { domain: Domain::Torus, has_symmetry: !actions.is_empty(), infinite: false, actions, residual: best }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval(n: usize, l: f64) -> (UniformGrid, Vec<f64>) {
        let h = l / n as f64;
        (UniformGrid { start: -0.5 * l, h, len: n + 1, periodic: false }, (0..=n).map(|i| -0.5 * l + i as f64 * h).collect())
    }

    #[test]
    fn even_function_is_symmetric() {
        let (g, s) = interval(200, 2.0);
        let mu: Vec<f64> = s.iter().map(|x| 2.0 + x * x).collect();
        let r = mu_symmetry(&mu, g, &Tolerances::default());
        assert!(r.has_symmetry);
        assert_eq!(r.actions[0].sigma, -1);
    }

    #[test]
    fn cosine_of_linear_angle_is_not() {
        let l = std::f64::consts::FRAC_PI_2;
        let (g, s) = interval(256, l);
        let mu: Vec<f64> = s.iter().map(|x| (std::f64::consts::FRAC_PI_4 - x / 2.0).cos()).collect();
        assert!(!mu_symmetry(&mu, g, &Tolerances::default()).has_symmetry);
    }

    #[test]
    fn torus_shift_and_constant() {
        let n = 300;
        let l = 3.0;
        let h = l / n as f64;
        let g = UniformGrid { start: 0.0, h, len: n, periodic: true };
        let w = std::f64::consts::TAU / l;
        let mu: Vec<f64> = (0..n).map(|i| 2.0 + (3.0 * w * i as f64 * h + 0.3).sin()).collect();
        let r = mu_symmetry(&mu, g, &Tolerances::default());
        assert!(r.has_symmetry);
        assert!(r.actions.iter().any(|a| a.sigma == 1 && (a.shift - 1.0).abs() < 1e-9));
        assert!(r.actions.iter().any(|a| a.sigma == -1));
        let c = mu_symmetry(&vec![0.7; n], g, &Tolerances::default());
        assert!(c.infinite && c.has_symmetry);
    }
}
