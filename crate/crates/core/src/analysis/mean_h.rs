use super::classify::{classify_quartet, CongruenceReport};
use crate::config::Settings;
use crate::curve::{Domain, Frame, SpaceCurve};
use crate::error::{GeometryError, Result};
use crate::isomers::inverse_dual;
use crate::numeric::derivative_within;
use crate::strip::DevelopableStrip;
use std::f64::consts::FRAC_PI_2;

type Func<'a> = &'a (dyn Fn(f64) -> f64 + Sync);

/// Output of the equal-mean-curvature torsion construction.
#[derive(Debug, Clone)]
pub struct MeanCurvatureSolution {
    /// Length of the interval actually used, centred at s = 0.
    pub interval_length: f64,
    pub halvings: u32,
    pub s: Vec<f64>,
    pub tau: Vec<f64>,
    /// F with first angular function α along the reconstructed crease.
    pub f: DevelopableStrip,
    /// F1(s, v) = (inverse dual of F)(−s, v).
    pub f1: DevelopableStrip,
    /// sup |H_F − H_F1| along the crease.
    pub h_mismatch: f64,
    /// sup over interior samples of the torsion equation residual, using the
    /// strips' sampled angular functions.
    pub tau_residual: f64,
    pub tau0: f64,
    pub report: CongruenceReport,
}

struct Coefficients {
    b0: f64,
    b1: f64,
    b2: f64,
    ratio: f64,
}

/// Derivative step and the input domain [−l/2, l/2] that stencils must
/// stay inside.
#[derive(Clone, Copy)]
struct Stencil {
    h: f64,
    half: f64,
}

impl Stencil {
    fn diff(&self, f: &dyn Fn(f64) -> f64, s: f64) -> f64 {
        derivative_within(f, s, self.h, -self.half, self.half)
    }
}

fn coefficients(kappa: Func, alpha: Func, s: f64, st: Stencil) -> Coefficients {
    let ratio_at = |x: f64| kappa(-x) * alpha(-x).cos() / kappa(x);
    let big_a = |x: f64| ratio_at(x).clamp(-1.0, 1.0).acos();
    let (al, ap) = (alpha(s), st.diff(alpha, s));
    let (aa, aap) = (big_a(s), st.diff(&big_a, s));
    let k = kappa(s);
    let (csa, csb) = (1.0 / al.sin(), 1.0 / aa.sin());
    Coefficients {
        b0: csa - csb,
        b1: ap * csa - aap * csb,
        b2: (ap * ap + k * k * al.sin().powi(2)) * csa - (aap * aap + k * k * aa.sin().powi(2)) * csb,
        ratio: ratio_at(s),
    }
}

fn torsion(c: &Coefficients) -> f64 {
    -c.b2 / (c.b1 + (c.b1 * c.b1 - c.b0 * c.b2).sqrt())
}

/// τ(0) = −B₂(0) / (2 B₁(0)) from the closed-form values of A(0), A′(0),
/// B₁(0) and B₂(0).
pub fn tau_at_origin_closed_form(kappa: Func, alpha: Func, hd: f64) -> f64 {
    let st = Stencil { h: hd, half: f64::INFINITY };
    let (k, kp) = (kappa(0.0), st.diff(kappa, 0.0));
    let (a, ap) = (alpha(0.0), st.diff(alpha, 0.0));
    let cot = a.cos() / a.sin();
    let csc = 1.0 / a.sin();
    let big_ap = 2.0 * kp * cot / k - ap;
    let b1 = -2.0 * csc / k * (kp * cot - k * ap);
    let b2 = csc * (ap * ap - big_ap * big_ap);
    -b2 / (2.0 * b1)
}

/// Finds a torsion τ such that F (angle α) and F1 = F̌*(−s, ·) have equal
/// mean curvature along the crease, builds the crease from (κ, τ) and
/// classifies the isomers of F. κ and α are functions of arc length with
/// s = 0 at the midpoint; the interval is halved towards 0 (at most ten
/// times) until the construction is well defined.
pub fn equal_mean_curvature_torsion(kappa: Func, alpha: Func, l: f64, settings: &Settings) -> Result<MeanCurvatureSolution> {
    let st = Stencil { h: 1e-3 * l, half: 0.5 * l };
    let kp0 = st.diff(kappa, 0.0);
    let ap0 = st.diff(alpha, 0.0);
    if !(kp0 < 0.0) {
        return Err(GeometryError::PreconditionFailed(format!("kappa'(0) = {kp0:e} is not negative")));
    }
    if ap0 < -1e-10 {
        return Err(GeometryError::PreconditionFailed(format!("alpha'(0) = {ap0:e} is negative")));
    }
    let n = settings.resolution + settings.resolution % 2;
    let mut len = l;
    let mut halvings = 0;
    loop {
        match check_interval(kappa, alpha, len, st, 4 * n) {
            Ok(()) => break,
            Err(e) if halvings >= 10 => return Err(e),
            Err(_) => {
                len *= 0.5;
                halvings += 1;
            }
        }
    }
    let tau_fn = |s: f64| torsion(&coefficients(kappa, alpha, s, st));
    let tol = &settings.tol;
    let curve = SpaceCurve::from_kappa_tau(kappa, &tau_fn, len, Frame::default(), Domain::Interval, n, tol)?;
    let f = DevelopableStrip::build(curve, &|s| alpha(s), settings.width_fraction * len, tol)?;
    let f1 = inverse_dual(&f, tol)?.reversed()?;
    let (hf, h1) = (f.mean_curvature_along_crease(), f1.mean_curvature_along_crease());
    let h_mismatch = hf.iter().zip(&h1).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let c = f.crease();
    let tau_residual = (1..c.len() - 1)
        .map(|i| {
            let k = c.kappa()[i];
            let t = c.tau()[i];
            let side = |a: f64, ap: f64| (k * k * a.sin().powi(2) + (ap + t).powi(2)) / a.sin();
            (side(f.alpha()[i], f.alpha_prime()[i]) - side(f1.alpha()[i], f1.alpha_prime()[i])).abs()
        })
        .fold(0.0, f64::max);
    let report = classify_quartet(&f, settings)?;
    Ok(MeanCurvatureSolution {
        interval_length: len,
        halvings,
        s: c.s().to_vec(),
        tau: c.tau().to_vec(),
        tau0: tau_fn(0.0),
        h_mismatch,
        tau_residual,
        f,
        f1,
        report,
    })
}

fn check_interval(kappa: Func, alpha: Func, len: f64, st: Stencil, samples: usize) -> Result<()> {
    let mut max_mu = f64::NEG_INFINITY;
    let mut min_kappa = f64::INFINITY;
    for k in 0..=samples {
        let s = -0.5 * len + len * k as f64 / samples as f64;
        let a = alpha(s);
        if !(a > 0.0 && a < FRAC_PI_2) {
            return Err(GeometryError::PreconditionFailed(format!("alpha({s}) = {a} outside (0, pi/2)")));
        }
        let c = coefficients(kappa, alpha, s, st);
        if !(c.ratio.abs() < 1.0) {
            return Err(GeometryError::PreconditionFailed(format!("A({s}) undefined")));
        }
        let disc = c.b1 * c.b1 - c.b0 * c.b2;
        if !(disc >= 0.0) {
            return Err(GeometryError::NegativeDiscriminant { s, value: disc });
        }
        if !(c.b1 + disc.sqrt() > 0.0) {
            return Err(GeometryError::PreconditionFailed(format!("torsion formula singular at s = {s}")));
        }
        max_mu = max_mu.max(kappa(s) * a.cos());
        min_kappa = min_kappa.min(kappa(s));
    }
    if max_mu >= min_kappa {
        return Err(GeometryError::NotAdmissible { max_mu, min_kappa });
    }
    Ok(())
}
