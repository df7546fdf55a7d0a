mod common;

use curvefold::catalog::Builtin;
use curvefold::curve::symmetry::detect_curve_symmetries;
use curvefold::curve::{Domain, V2, V3};
use curvefold::numeric::procrustes::fit;
use curvefold::{Frame, Isometry3, PlaneCurve, SpaceCurve, Tolerances};
use nalgebra::{Rotation3, Vector3};
use proptest::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2, TAU};

fn tol() -> Tolerances {
    Tolerances::default()
}

fn helix_points(m: usize) -> Vec<V3> {
    (0..=m)
        .map(|k| {
            let s = -2.0 + 4.0 * k as f64 / m as f64;
            V3::new((s * FRAC_1_SQRT_2).cos(), (s * FRAC_1_SQRT_2).sin(), s * FRAC_1_SQRT_2)
        })
        .collect()
}

fn max_dev(xs: &[f64], target: f64) -> f64 {
    xs.iter().fold(0.0, |m, x| m.max((x - target).abs()))
}

#[test]
fn resampled_circle_has_unit_curvature() {
    let pts: Vec<V3> = (0..64).map(|k| TAU * k as f64 / 64.0).map(|t| V3::new(t.cos(), t.sin(), 0.0)).collect();
    let c = SpaceCurve::resample_by_arclength(&pts, Domain::Torus, 128).unwrap();
    assert!((c.length() - TAU).abs() < 1e-4, "length {}", c.length());
    assert!(max_dev(c.kappa(), 1.0) < 1e-3);
    assert!(max_dev(c.tau(), 0.0) < 1e-3);
    assert_eq!(c.len(), 128);
}

#[test]
fn resampled_helix_has_half_curvature_and_torsion() {
    let c = SpaceCurve::resample_by_arclength(&helix_points(400), Domain::Interval, 2048).unwrap();
    assert!((c.length() - 4.0).abs() < 1e-6);
    assert!(max_dev(c.kappa(), 0.5) < 1e-3);
    assert!(max_dev(c.tau(), 0.5) < 1e-3);
    let h = c.step();
    for w in c.points().windows(2) {
        assert!((w[1] - w[0]).norm() <= h + tol().len * c.length());
    }
}

#[test]
fn collinear_points_are_rejected() {
    let pts = [V3::zeros(), V3::x(), 2.0 * V3::x()];
    let err = SpaceCurve::resample_by_arclength(&pts, Domain::Interval, 16).unwrap_err();
    assert!(matches!(err.name(), "DegenerateCurve" | "VanishingCurvature"), "{err}");
}

#[test]
fn integrated_quarter_arc_has_chord_sqrt2() {
    let c = SpaceCurve::from_kappa_tau(&|_| 1.0, &|_| 0.0, FRAC_PI_2, Frame::default(), Domain::Interval, 2048, &tol()).unwrap();
    let chord = (c.points()[c.len() - 1] - c.points()[0]).norm();
    assert!((chord - SQRT_2).abs() < 1e-6, "chord {chord}");
}

#[test]
fn integrated_arctan_data_matches_the_arctan_curve() {
    let k = |s: f64| SQRT_2 / (1.0 + (s + 0.5).powi(2));
    let c = SpaceCurve::from_kappa_tau(&k, &k, 0.8, Frame::default(), Domain::Interval, 2048, &tol()).unwrap();
    let reference = Builtin::ArctanCurve.space_curve(2048, None).unwrap();
    let f = fit(c.points(), reference.points(), false);
    assert!(f.max_residual < 1e-4, "residual {}", f.max_residual);
}

#[test]
fn integrated_helix_measures_constant_curvature_and_torsion() {
    let c = SpaceCurve::from_kappa_tau(&|_| 0.5, &|_| 0.5, 4.0, Frame::default(), Domain::Interval, 2048, &tol()).unwrap();
    // measured on every 4th sample: at the full resolution the third
    // difference is dominated by rounding (weights grow like 1/h³)
    let pts: Vec<V3> = c.points().iter().step_by(4).copied().collect();
    let s: Vec<f64> = c.s().iter().step_by(4).copied().collect();
    let measured = SpaceCurve::from_uniform_points(Domain::Interval, 4.0, pts, s).unwrap();
    assert!(max_dev(measured.kappa(), 0.5) < 1e-6, "{}", max_dev(measured.kappa(), 0.5));
    assert!(max_dev(measured.tau(), 0.5) < 1e-6, "{}", max_dev(measured.tau(), 0.5));
}

#[test]
fn integration_checks_its_inputs() {
    let skew = Frame { e: V3::new(1.0, 0.1, 0.0), ..Frame::default() };
    let err = SpaceCurve::from_kappa_tau(&|_| 1.0, &|_| 0.0, 1.0, skew, Domain::Interval, 64, &tol()).unwrap_err();
    assert_eq!(err.name(), "NonOrthonormalFrame");
    let err = SpaceCurve::from_kappa_tau(&|s| s, &|_| 0.0, 1.0, Frame::default(), Domain::Interval, 64, &tol()).unwrap_err();
    assert_eq!(err.name(), "NonPositiveKappa");
}

#[test]
fn unit_curvature_develops_to_closed_circle() {
    let g = PlaneCurve::from_mu(&|_| 1.0, 0.0, TAU, V2::zeros(), 0.0, 2048, true).unwrap();
    assert!(g.endpoint_gap() < 1e-6, "gap {}", g.endpoint_gap());
    let measured = g.measured_curvature();
    assert!(max_dev(&measured, 1.0) < 1e-5);
}

fn developed(example: Builtin, domain: (f64, f64)) -> (PlaneCurve, PlaneCurve) {
    let reference = example.plane_curve(2048, Some(domain)).unwrap();
    let grid = curvefold::numeric::interp::UniformGrid { start: 0.0, h: reference.length() / 2048.0, len: 2049, periodic: false };
    let dev = PlaneCurve::from_mu_samples(reference.mu(), grid, V2::zeros(), 0.0).unwrap();
    (reference, dev)
}

#[test]
fn trochoid_development_simple_on_one_window_only() {
    let (_, first) = developed(Builtin::Trochoid, (0.0, TAU));
    let (_, second) = developed(Builtin::Trochoid, (PI, 3.0 * PI));
    assert!(first.is_simple());
    assert!(!second.is_simple());
}

#[test]
fn ellipse_development_reproduces_the_ellipse() {
    let (reference, dev) = developed(Builtin::Ellipse { a: 1.2 }, (0.0, TAU));
    let lift = |p: &V2| V3::new(p.x, p.y, 0.0);
    let a: Vec<V3> = dev.points().iter().map(lift).collect();
    let b: Vec<V3> = reference.points().iter().map(lift).collect();
    let f = fit(&a, &b, false);
    assert!(f.max_residual < 1e-4, "residual {}", f.max_residual);
}

#[test]
fn planar_asymmetric_arc_has_only_the_trivial_symmetry() {
    let c = Builtin::Ellipse { a: 1.2 }.space_curve(2048, Some((0.3, 1.2))).unwrap();
    let r = detect_curve_symmetries(&c, &tol());
    assert!(r.is_planar && r.has_trivial_symmetry);
    assert!(!r.has_nontrivial());
}

#[test]
fn helix_symmetry_is_half_turn_about_midpoint_normal() {
    let c = Builtin::Helix.space_curve(2048, None).unwrap();
    let r = detect_curve_symmetries(&c, &tol());
    assert!(!r.is_planar);
    assert_eq!(r.symmetries.len(), 1);
    let s = r.symmetries[0];
    assert_eq!(s.sign(), 1);
    assert_eq!(s.action.sigma, -1);
    let mid = c.frame(c.len() / 2);
    let expected = Isometry3::rotation_about(&mid.point, &mid.n, PI);
    assert!((s.isometry.rotation - expected.rotation).abs().max() < 1e-6);
    assert!((s.isometry.translation - expected.translation).norm() < 1e-6);
}

#[test]
fn arctan_curve_has_no_symmetries() {
    let c = Builtin::ArctanCurve.space_curve(2048, None).unwrap();
    let r = detect_curve_symmetries(&c, &tol());
    assert!(!r.is_planar && !r.has_trivial_symmetry && !r.has_nontrivial());
}

#[test]
fn circle_is_flagged_infinite() {
    let c = Builtin::Ellipse { a: 1.0 }.space_curve(1024, None).unwrap();
    let r = detect_curve_symmetries(&c, &tol());
    assert!(r.is_circle && r.infinite && r.symmetries.is_empty());
}

#[test]
fn torus_curve_symmetries_are_finite() {
    let c = Builtin::TorusCurve { m: 3.0 }.space_curve(2048, None).unwrap();
    let r = detect_curve_symmetries(&c, &tol());
    assert!(!r.is_planar && !r.is_circle);
    assert!(r.has_positive_symmetry);
    let l = c.length();
    for s in &r.symmetries {
        assert!(s.residual < tol().sym * l);
    }
}

#[test]
fn reverse_is_an_involution() {
    for b in Builtin::all().into_iter().filter(|b| !b.is_closed()) {
        let c = b.space_curve(256, None).unwrap();
        assert_eq!(c.reversed().reversed(), c, "{}", b.name());
    }
}

#[test]
fn reversed_helix_keeps_curvature_and_torsion() {
    let c = Builtin::Helix.space_curve(2048, None).unwrap();
    let r = c.reversed();
    assert!(max_dev(r.kappa(), 0.5) < 1e-12 && max_dev(r.tau(), 0.5) < 1e-12);
    for i in 0..c.len() {
        assert_eq!(r.tangents()[i], -c.tangents()[c.mirror_index(i)]);
        assert_eq!(r.normals()[i], c.normals()[c.mirror_index(i)]);
    }
}

#[test]
fn reversed_quarter_circle_has_same_samples() {
    let c = Builtin::QuarterCircle.space_curve(512, None).unwrap();
    let r = c.reversed();
    let mut a: Vec<[u64; 3]> = c.points().iter().map(|p| [p.x.to_bits(), p.y.to_bits(), p.z.to_bits()]).collect();
    let mut b: Vec<[u64; 3]> = r.points().iter().map(|p| [p.x.to_bits(), p.y.to_bits(), p.z.to_bits()]).collect();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
}

#[test]
fn frenet_frames_are_right_handed_and_orthonormal() {
    for b in Builtin::all() {
        let c = b.space_curve(1024, None).unwrap();
        let d = c.diagnostics();
        assert!(d.frame_error < 1e-8, "{} frame error {}", b.name(), d.frame_error);
        assert!(d.min_kappa > 0.0);
        for i in 0..c.len() {
            assert!(c.tangents()[i].cross(&c.normals()[i]).dot(&c.binormals()[i]) > 0.0);
        }
        c.validate(&tol()).unwrap();
    }
}

#[test]
fn closed_curves_wrap_smoothly() {
    let c = Builtin::TorusCurve { m: 3.0 }.space_curve(2048, None).unwrap();
    assert!(c.diagnostics().periodic_gap < tol().periodic);
}

/// Measure κ and τ, integrate them back and compare shapes.
fn round_trip_residual(c: &SpaceCurve) -> f64 {
    let g = c.grid();
    let (kappa, tau) = (c.kappa().to_vec(), c.tau().to_vec());
    let k = move |s: f64| g.eval(&kappa, s);
    let t = move |s: f64| g.eval(&tau, s);
    let mid = c.frame(c.len() / 2);
    let r = SpaceCurve::from_kappa_tau(&k, &t, c.length(), mid, Domain::Interval, c.intervals(), &tol()).unwrap();
    fit(r.points(), c.points(), false).max_residual
}

#[test]
fn round_trip_of_catalog_arcs() {
    for b in [Builtin::Helix, Builtin::ArctanCurve, Builtin::PerturbedHelix { d: 0.1 }, Builtin::QuarterCircle] {
        let c = b.space_curve(2048, None).unwrap();
        let r = round_trip_residual(&c);
        assert!(r < 1e-4 * c.length(), "{}: {r}", b.name());
    }
}

fn motion() -> impl Strategy<Value = Isometry3> {
    (-PI..PI, -PI..PI, 0.0..PI, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, any::<bool>()).prop_map(|(a, b, g, x, y, z, flip)| {
        let mut r = *Rotation3::from_euler_angles(a, b, g).matrix();
        if flip {
            r.set_column(2, &(-r.column(2)));
        }
        Isometry3 { rotation: r, translation: Vector3::new(x, y, z) }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn round_trip_of_torus_arcs(t0 in -1.0..1.0f64, len in 0.5..2.0f64) {
        let c = Builtin::TorusCurve { m: 3.0 }.space_curve(2048, Some((t0, t0 + len))).unwrap();
        prop_assert!(round_trip_residual(&c) < 1e-4 * c.length());
    }

    #[test]
    fn symmetry_report_is_conjugation_consistent(m in motion(), which in 0usize..3) {
        let b = [Builtin::Helix, Builtin::QuarterCircle, Builtin::TorusCurve { m: 3.0 }][which];
        let c = b.space_curve(1024, None).unwrap();
        let base = detect_curve_symmetries(&c, &tol());
        let moved = detect_curve_symmetries(&c.transformed(&m), &tol());
        prop_assert_eq!(base.is_planar, moved.is_planar);
        prop_assert_eq!(base.symmetries.len(), moved.symmetries.len());
        // T and T∘T0 of a planar curve share an action, so match as sets
        for s in &base.symmetries {
            let conj = m.compose(&s.isometry).compose(&m.inverse());
            let found = moved.symmetries.iter().any(|t| {
                t.action.sigma == s.action.sigma
                    && (t.action.shift - s.action.shift).abs() < 1e-9
                    && t.sign() == s.sign()
                    && (conj.rotation - t.isometry.rotation).abs().max() < 1e-8
                    && (conj.translation - t.isometry.translation).norm() < 1e-8 * (1.0 + m.translation.norm())
            });
            prop_assert!(found, "no conjugate for {:?}", s.action);
        }
    }

    #[test]
    fn both_signs_iff_planar_with_nontrivial_symmetry(which in 0usize..7, lo in -0.3..0.3f64, len in 0.6..1.6f64) {
        let b = Builtin::all()[which];
        let (t0, t1) = b.default_domain();
        let mid = 0.5 * (t0 + t1) + lo * (t1 - t0) * 0.2;
        let half = 0.25 * len * (t1 - t0);
        let c = b.space_curve(1024, Some((mid - half, mid + half))).unwrap();
        let r = detect_curve_symmetries(&c, &tol());
        if r.has_positive_symmetry && r.has_negative_symmetry {
            prop_assert!(r.is_planar && r.has_nontrivial());
        }
        if r.is_planar && r.has_nontrivial() {
            prop_assert!(r.has_positive_symmetry && r.has_negative_symmetry);
        }
    }
}

