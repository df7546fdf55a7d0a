//! Fixtures shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use curvefold::catalog::Builtin;
use curvefold::{DevelopableStrip, Settings, SpaceCurve};
use std::f64::consts::PI;

pub struct Fixture {
    pub name: &'static str,
    pub strip: DevelopableStrip,
    /// Expected N from the case analysis, fixed by hand from the geometry.
    pub expected_n: usize,
}

pub fn settings() -> Settings {
    Settings::default()
}

pub fn crease(example: Builtin, domain: Option<(f64, f64)>, settings: &Settings) -> SpaceCurve {
    example.space_curve(settings.resolution, domain).expect("fixture crease")
}

/// Strip with α given at the native parameter.
pub fn strip_with(example: Builtin, domain: Option<(f64, f64)>, alpha: impl Fn(f64) -> f64, settings: &Settings) -> DevelopableStrip {
    let c = crease(example, domain, settings);
    let w = settings.width_fraction * c.length();
    DevelopableStrip::build(c, &alpha, w, &settings.tol).expect("fixture strip")
}

/// Strip whose geodesic curvature is the constant `ratio · min κ`.
pub fn constant_mu(example: Builtin, domain: Option<(f64, f64)>, ratio: f64, settings: &Settings) -> DevelopableStrip {
    let c = crease(example, domain, settings);
    let m0 = ratio * c.min_kappa();
    let alpha = c.kappa().iter().map(|k| (m0 / k).acos()).collect();
    let w = settings.width_fraction * c.length();
    DevelopableStrip::from_alpha(c, alpha, w, &settings.tol).expect("fixture strip")
}

pub fn arctan_strip(settings: &Settings) -> DevelopableStrip {
    strip_with(Builtin::ArctanCurve, None, |s| PI * (s + 10.0) / 24.0, settings)
}

pub fn helix_strip(settings: &Settings) -> DevelopableStrip {
    strip_with(Builtin::Helix, None, |_| PI / 3.0, settings)
}

pub fn quarter_circle_strip(settings: &Settings) -> DevelopableStrip {
    strip_with(Builtin::QuarterCircle, None, |s| PI / 4.0 - s / 2.0, settings)
}

/// Interval strips covering planar / non-planar creases, symmetric /
/// asymmetric κ and symmetric / asymmetric μ.
pub fn battery(settings: &Settings) -> Vec<Fixture> {
    let ellipse = Builtin::Ellipse { a: 1.2 };
    let torus = Builtin::TorusCurve { m: 3.0 };
    let ph = Builtin::PerturbedHelix { d: 0.1 };
    let fx = |name, strip, expected_n| Fixture { name, strip, expected_n };
    vec![
        // non-planar, symmetric κ
        fx("helix_const", helix_strip(settings), 1),
        fx("helix_linear", strip_with(Builtin::Helix, None, |t| PI / 3.0 + 0.05 * t, settings), 2),
        fx("helix_even", strip_with(Builtin::Helix, None, |t| PI / 3.0 + 0.02 * t * t, settings), 1),
        fx("torus_arc_const", strip_with(torus, Some((-0.5, 0.5)), |_| PI / 4.0, settings), 1),
        fx("torus_arc_linear", strip_with(torus, Some((-0.5, 0.5)), |t| PI / 4.0 + 0.1 * t, settings), 2),
        // non-planar, asymmetric κ
        fx("arctan_linear", arctan_strip(settings), 4),
        fx("arctan_const_mu", constant_mu(Builtin::ArctanCurve, None, 0.5, settings), 2),
        fx("perturbed_helix_const", strip_with(ph, None, |_| PI / 3.0, settings), 4),
        fx("torus_arc_offset", strip_with(torus, Some((0.1, 0.9)), |_| PI / 4.0, settings), 4),
        // planar, symmetric κ
        fx("quarter_circle_linear", quarter_circle_strip(settings), 1),
        fx("quarter_circle_const", strip_with(Builtin::QuarterCircle, None, |_| PI / 4.0, settings), 1),
        fx("ellipse_arc_sym", strip_with(ellipse, Some((-0.6, 0.6)), |_| PI / 4.0, settings), 1),
        // planar, asymmetric κ
        fx("ellipse_arc_const", strip_with(ellipse, Some((0.3, 1.2)), |_| 1.2, settings), 2),
        fx("ellipse_arc_const_mu", constant_mu(ellipse, Some((0.3, 1.2)), 0.5, settings), 1),
        fx("trochoid_arc", strip_with(Builtin::Trochoid, Some((1.0, 2.2)), |_| 1.4, settings), 2),
    ]
}

/// Torus curve c₃ with the ellipse (a = 6/5) generator rescaled to its length.
pub fn closed_c3_strip(settings: &Settings) -> DevelopableStrip {
    let c = crease(Builtin::TorusCurve { m: 3.0 }, None, settings);
    let g = Builtin::Ellipse { a: 1.2 }.plane_curve(settings.resolution, None).expect("generator");
    let w = settings.width_fraction * c.length();
    DevelopableStrip::from_generator(c, &g, w, &settings.tol).expect("closed fixture")
}
