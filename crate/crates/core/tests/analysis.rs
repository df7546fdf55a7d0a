mod common;

use common::{arctan_strip, closed_c3_strip, helix_strip, quarter_circle_strip, settings, strip_with};
use curvefold::analysis::{
    classify_closed, classify_quartet, equal_mean_curvature_torsion, midpoint_criterion, mu_symmetry,
    tau_at_origin_closed_form, MidpointVerdict, DecisionCase,
};
use curvefold::catalog::Builtin;
use curvefold::curve::symmetry::detect_curve_symmetries;
use curvefold::curve::{Domain, Parametric3, V3};
use curvefold::isomers::{dual, inverse, inverse_dual};
use curvefold::numeric::interp::UniformGrid;
use curvefold::numeric::quad::ArcLength;
use curvefold::{DevelopableStrip, Isometry3, SpaceCurve};
use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI, SQRT_2, TAU};

#[test]
fn mu_symmetry_examples() {
    let st = settings();
    let f = quarter_circle_strip(&st);
    assert!(!mu_symmetry(f.mu(), f.grid(), &st.tol).has_symmetry);
    let g = UniformGrid { start: -1.0, h: 2.0 / 512.0, len: 513, periodic: false };
    let even: Vec<f64> = (0..513).map(|i| 2.0 + (g.start + i as f64 * g.h).powi(2)).collect();
    let r = mu_symmetry(&even, g, &st.tol);
    assert!(r.has_symmetry);
    assert_eq!(r.actions.len(), 1);
    assert_eq!(r.actions[0].sigma, -1);
    let t = UniformGrid { start: 0.0, h: TAU / 256.0, len: 256, periodic: true };
    let r = mu_symmetry(&[0.7; 256], t, &st.tol);
    assert!(r.has_symmetry && r.infinite);
}

#[test]
fn arctan_quartet_is_case_b1() {
    let st = settings();
    let r = classify_quartet(&arctan_strip(&st), &st).unwrap();
    assert_eq!((r.n_right_classes, r.n_congruence_classes, r.fired_case), (4, 4, DecisionCase::B1NoSymmetries));
    assert!(r.oracle_agrees);
}

#[test]
fn quarter_circle_quartet() {
    let st = settings();
    let r = classify_quartet(&quarter_circle_strip(&st), &st).unwrap();
    assert!(r.curve.is_planar && r.curve.has_nontrivial() && !r.mu.has_symmetry);
    assert_eq!(r.n_right_classes, 4);
    assert_eq!(r.n_right_classes_normal_form, 4);
    assert_eq!((r.n_congruence_classes, r.fired_case), (1, DecisionCase::B3aPlanarNontrivial));
    assert!(r.oracle_agrees);
}

#[test]
fn helix_quartet_is_case_b3c() {
    let st = settings();
    let r = classify_quartet(&helix_strip(&st), &st).unwrap();
    assert_eq!((r.n_right_classes, r.n_congruence_classes, r.fired_case), (2, 1, DecisionCase::B3cPositiveSymMuSym));
    assert!(r.oracle_agrees);
}

#[test]
fn classification_rejects_closed_and_inadmissible_strips() {
    let st = settings().with_resolution(512);
    assert_eq!(classify_quartet(&closed_c3_strip(&st), &st).unwrap_err().name(), "NotInterval");
    let f = strip_with(Builtin::ArctanCurve, None, |_| 0.01, &st);
    assert_eq!(classify_quartet(&f, &st).unwrap_err().name(), "NotAdmissible");
}

#[test]
fn report_matrix_is_consistent() {
    let st = settings();
    for fx in common::battery(&st) {
        let r = classify_quartet(&fx.strip, &st).unwrap();
        let m = &r.pairwise_matrix;
        for i in 0..4 {
            assert!(m[i][i]);
            for j in 0..4 {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
        assert!(r.n_congruence_classes <= r.n_right_classes, "{}", fx.name);
        assert_eq!(r.n_right_classes, r.n_right_classes_normal_form, "{}", fx.name);
        assert_eq!(r.n_congruence_classes, fx.expected_n, "{}", fx.name);
        assert_eq!(r.registration_classes, r.n_congruence_classes, "{}", fx.name);
        assert_eq!(r.fired_case, *r.satisfied_subcases.first().unwrap_or(&r.fired_case));
    }
}

/// μ′ of the arctan-curve strip at s = 1/2, worked by hand from
/// κ = √2/(1+s²) and α = π(s+10)/24.
fn arctan_mu_prime_at_half() -> f64 {
    let s: f64 = 0.5;
    let kappa = SQRT_2 / (1.0 + s * s);
    let kappa_prime = -2.0 * SQRT_2 * s / (1.0 + s * s).powi(2);
    let alpha = PI * (s + 10.0) / 24.0;
    kappa_prime * alpha.cos() - kappa * (PI / 24.0) * alpha.sin()
}

#[test]
fn arctan_midpoint_derivatives() {
    let st = settings();
    let r = midpoint_criterion(&arctan_strip(&st), &st.tol).unwrap();
    assert_eq!(r.verdict, MidpointVerdict::NIs4);
    let quoted = -(96.0 * (PI / 16.0).sin() + 5.0 * PI * (PI / 16.0).cos()) / (75.0 * SQRT_2);
    assert!((arctan_mu_prime_at_half() - quoted).abs() < 1e-9);
    assert!((r.mu_prime - quoted).abs() < 1e-5, "μ′ = {}", r.mu_prime);
    // κ = √2/(1+s²) decreases on s > 0
    assert!((r.kappa_prime + 2.0 * SQRT_2 * 0.5 / 1.5625).abs() < 1e-5);
}

#[test]
fn perturbed_helix_midpoint() {
    let st = settings();
    let f = strip_with(Builtin::PerturbedHelix { d: 0.1 }, None, |_| FRAC_PI_3, &st);
    let r = midpoint_criterion(&f, &st.tol).unwrap();
    assert_eq!(r.verdict, MidpointVerdict::NIs4);
    assert!(r.kappa_prime < 0.0);
    let dk: Vec<f64> = curvefold::numeric::fd::differentiate(f.crease().kappa(), f.crease().step(), 1, false);
    assert!(dk.iter().all(|d| *d < 0.0));
}

#[test]
fn helix_midpoint_is_inconclusive() {
    let st = settings();
    assert_eq!(midpoint_criterion(&helix_strip(&st), &st.tol).unwrap().verdict, MidpointVerdict::Inconclusive);
    assert_eq!(midpoint_criterion(&quarter_circle_strip(&st), &st.tol).unwrap_err().name(), "PlanarCurve");
}

/// Exact κ of the perturbed helix as a function of centred arc length.
fn perturbed_helix_kappa(d: f64) -> (impl Fn(f64) -> f64, f64) {
    let b = Builtin::PerturbedHelix { d };
    let (t0, t1) = b.default_domain();
    let map = ArcLength::new(move |t| b.jet(t)[1].norm(), t0, t1, 4096);
    let l = map.length();
    let kappa = move |s: f64| {
        let j = b.jet(map.param_at(s + 0.5 * l));
        j[1].cross(&j[2]).norm() / j[1].norm().powi(3)
    };
    (kappa, l)
}

#[test]
fn equal_mean_curvature_solver() {
    let st = settings();
    let (kappa, l) = perturbed_helix_kappa(0.1);
    let alpha = |_: f64| FRAC_PI_3;
    let sol = equal_mean_curvature_torsion(&kappa, &alpha, l, &st).unwrap();
    assert!(sol.tau_residual < st.tol.mean_h, "τ residual {}", sol.tau_residual);
    assert!(sol.h_mismatch < 1e-6, "H mismatch {}", sol.h_mismatch);
    let hd = 1e-3 * l;
    assert!((sol.tau0 - tau_at_origin_closed_form(&kappa, &alpha, hd)).abs() < 1e-9);
    assert_eq!(sol.report.n_congruence_classes, 4);
    assert!(sol.report.oracle_agrees);
    // F1 is the reversed inverse dual of F
    let f1 = inverse_dual(&sol.f, &st.tol).unwrap().reversed().unwrap();
    assert_eq!(f1.alpha(), sol.f1.alpha());
}

#[test]
fn solver_preconditions() {
    let st = settings();
    let (kappa, l) = perturbed_helix_kappa(0.1);
    let rising = |s: f64| kappa(-s);
    let err = equal_mean_curvature_torsion(&rising, &|_| FRAC_PI_3, l, &st).unwrap_err();
    assert_eq!(err.name(), "PreconditionFailed");
    let err = equal_mean_curvature_torsion(&kappa, &|s| FRAC_PI_3 - 0.1 * s, l, &st).unwrap_err();
    assert_eq!(err.name(), "PreconditionFailed");
}

#[test]
fn torus_census() {
    let st = settings();
    let f = closed_c3_strip(&st);
    let c = classify_closed(&f, 8, &st).unwrap();
    assert_eq!(c.members.len(), 32);
    let label = |index: u8, step: usize| c.labels[c.members.iter().position(|m| m.index == index && m.step == step).unwrap()];
    let (a, b, d) = (label(1, 0), label(1, 1), label(1, 2));
    assert!(a != b && b != d && a != d);
    assert_eq!(c.finite_check, Some(true));
    assert!(c.max_class_size <= c.class_size_bound);
}

#[test]
fn circle_census_is_skipped() {
    let st = settings().with_resolution(512);
    let f = strip_with(Builtin::Ellipse { a: 1.0 }, None, |_| FRAC_PI_4, &st);
    assert_eq!(classify_closed(&f, 4, &st).unwrap_err().name(), "CircleCrease");
    assert_eq!(classify_closed(&helix_strip(&st), 4, &st).unwrap_err().name(), "NotClosed");
}

/// Closed curve with no symmetries: a torus knot with two off-phase
/// perturbations.
fn lumpy_loop(n: usize) -> SpaceCurve {
    let pts: Vec<V3> = (0..4096)
        .map(|k| {
            let t = TAU * k as f64 / 4096.0;
            let r = 2.0 + (3.0 * t).cos() + 0.3 * (2.0 * t + 0.4).cos();
            V3::new(r * t.cos(), r * t.sin(), (3.0 * t).sin() + 0.2 * (t + 1.0).sin())
        })
        .collect();
    SpaceCurve::resample_by_arclength(&pts, Domain::Torus, n).unwrap()
}

#[test]
fn asymmetric_closed_census_has_singleton_classes() {
    let st = settings();
    let c = lumpy_loop(st.resolution);
    let f = DevelopableStrip::from_alpha(c.clone(), vec![1.3; c.len()], st.width_fraction * c.length(), &st.tol).unwrap();
    let census = classify_closed(&f, 4, &st).unwrap();
    assert!(census.curve.symmetries.is_empty() && !census.mu.has_symmetry);
    assert_eq!(census.members.len(), 16);
    assert_eq!(census.n_classes, 16);
    assert_eq!(census.all_distinct_check, Some(true));
}

fn max_gap(t: &Isometry3, a: &DevelopableStrip, b: &DevelopableStrip) -> f64 {
    let eps = a.width();
    let mut worst: f64 = 0.0;
    for i in 0..a.crease().len() {
        for v in [-eps, 0.0, eps] {
            worst = worst.max((t.apply(&a.point(i, v)) - b.point(i, v)).norm());
        }
    }
    worst
}

#[test]
fn crease_symmetries_carry_f_to_the_inverse_pair() {
    let st = settings();
    for f in [helix_strip(&st), quarter_circle_strip(&st), strip_with(Builtin::TorusCurve { m: 3.0 }, Some((-0.5, 0.5)), |t| FRAC_PI_4 + 0.1 * t, &st)] {
        let report = detect_curve_symmetries(f.crease(), &st.tol);
        assert!(!report.symmetries.is_empty());
        let (inv, inv_dual) = (inverse(&f, &st.tol).unwrap(), inverse_dual(&f, &st.tol).unwrap());
        let limit = st.tol.sym * f.crease().length();
        for s in &report.symmetries {
            let target = if s.sign() > 0 { &inv } else { &inv_dual };
            assert!(max_gap(&s.isometry, &f, target) < limit);
        }
    }
}

#[test]
fn planar_reflection_carries_strip_to_dual() {
    let st = settings();
    for fx in common::battery(&st) {
        let report = detect_curve_symmetries(fx.strip.crease(), &st.tol);
        if let Some(t0) = report.trivial_symmetry() {
            assert!(max_gap(&t0, &fx.strip, &dual(&fx.strip)) < st.tol.sym * fx.strip.crease().length(), "{}", fx.name);
        }
    }
}

#[test]
fn classification_is_scale_invariant() {
    let st = settings();
    for fx in common::battery(&st) {
        let base = classify_quartet(&fx.strip, &st).unwrap();
        for lambda in [0.3, 4.0] {
            let scaled = fx.strip.scaled(lambda, &st.tol).unwrap();
            let r = classify_quartet(&scaled, &st).unwrap();
            assert_eq!(
                (r.n_right_classes, r.n_congruence_classes, r.fired_case),
                (base.n_right_classes, base.n_congruence_classes, base.fired_case),
                "{} at scale {lambda}",
                fx.name
            );
        }
    }
}
