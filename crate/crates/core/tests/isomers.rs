mod common;

use common::{arctan_strip, closed_c3_strip, helix_strip, quarter_circle_strip, settings, strip_with};
use curvefold::analysis::{class_labels, congruence_matrix, mu_symmetry};
use curvefold::catalog::Builtin;
use curvefold::curve::symmetry::best_fit_plane;
use curvefold::curve::Domain;
use curvefold::isomers::{
    closed_family, dual, inverse, inverse_dual, reverse_strip, right_equivalent, transplant, IsomerQuartet,
};
use curvefold::strip::{hausdorff, sample_mesh};
use curvefold::{DevelopableStrip, Frame, Isometry3, SpaceCurve};
use std::f64::consts::PI;

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

#[test]
fn transplant_onto_same_crease_with_minus_sign_is_the_dual() {
    let st = settings();
    let f = arctan_strip(&st);
    let g = transplant(&f, f.crease(), -1, &st.tol).unwrap();
    let d = dual(&f);
    assert!(max_abs_diff(g.alpha(), d.alpha()) < 1e-12);
    assert_eq!(g.mu(), f.mu());
    for a in g.alpha() {
        assert!(*a < 0.0);
    }
}

#[test]
fn transplant_onto_reversed_crease_is_the_inverse() {
    let st = settings();
    let f = arctan_strip(&st);
    let rev = f.crease().reversed();
    let g = transplant(&f, &rev, 1, &st.tol).unwrap();
    assert_eq!(g, inverse(&f, &st.tol).unwrap());
    let c = f.crease();
    for i in 0..c.len() {
        // κ(−u) cos α*(u) = κ(u) cos α(u)
        let lhs = c.kappa()[c.mirror_index(i)] * g.alpha()[i].cos();
        let rhs = c.kappa()[i] * f.alpha()[i].cos();
        assert!((lhs - rhs).abs() < st.tol.beta);
        assert!(g.alpha()[i] * f.alpha()[i] > 0.0);
    }
}

#[test]
fn transplant_errors() {
    let st = settings();
    let f = helix_strip(&st);
    // same sampling, but κ = 0.2 is below μ = cos(π/3)/2 = 0.25
    let flat = SpaceCurve::from_kappa_tau(&|_| 0.2, &|_| 0.1, 4.0, Frame::default(), Domain::Interval, st.resolution, &st.tol).unwrap();
    assert_eq!(transplant(&f, &flat, 1, &st.tol).unwrap_err().name(), "IncompatibleCurve");
    assert_eq!(transplant(&f, f.crease(), 0, &st.tol).unwrap_err().name(), "InvalidInput");
    let coarse = Builtin::Helix.space_curve(512, None).unwrap();
    assert_eq!(transplant(&f, &coarse, 1, &st.tol).unwrap_err().name(), "GridMismatch");
    let m = f.crease().len();
    let mixed: Vec<f64> = (0..m).map(|i| if i < m / 2 { 0.5 } else { -0.5 }).collect();
    let g = DevelopableStrip::from_alpha(f.crease().clone(), mixed, f.width(), &st.tol).unwrap();
    assert_eq!(transplant(&g, f.crease(), 1, &st.tol).unwrap_err().name(), "UnsupportedSignChange");
}

#[test]
fn dual_is_an_involution() {
    let st = settings();
    for fx in common::battery(&st) {
        assert_eq!(dual(&dual(&fx.strip)), fx.strip, "{}", fx.name);
    }
}

#[test]
fn helix_dual_is_half_turn_about_midpoint_normal() {
    let st = settings();
    let f = helix_strip(&st);
    let d = dual(&f);
    let c = f.crease();
    let mid = c.frame(c.len() / 2);
    let t = Isometry3::rotation_about(&mid.point, &mid.n, PI);
    let eps = f.width();
    let mut worst: f64 = 0.0;
    for i in 0..c.len() {
        for v in [-eps, -0.5 * eps, 0.0, 0.5 * eps, eps] {
            worst = worst.max((t.apply(&f.point(i, v)) - d.point(c.mirror_index(i), v)).norm());
        }
    }
    assert!(worst < st.tol.sym * c.length(), "residual {worst}");
}

#[test]
fn planar_dual_is_the_mirror_image() {
    let st = settings();
    let f = quarter_circle_strip(&st);
    let d = dual(&f);
    let (p, n, _) = best_fit_plane(f.crease().points());
    let t0 = Isometry3::reflection(&p, &n);
    for i in 0..f.crease().len() {
        assert!((t0.apply(&f.point(i, f.width())) - d.point(i, f.width())).norm() < 1e-12);
    }
}

#[test]
fn arctan_quartet_has_four_congruence_classes() {
    let st = settings();
    let q = IsomerQuartet::new(&arctan_strip(&st), &st.tol).unwrap();
    let (m, _) = congruence_matrix(&q.members(), st.rulings, &st.tol);
    let mut labels = class_labels(&m);
    labels.sort_unstable();
    labels.dedup();
    assert_eq!(labels.len(), 4);
}

#[test]
fn symmetric_data_make_inverse_dual_the_reverse() {
    let st = settings();
    let f = helix_strip(&st);
    let a = inverse_dual(&f, &st.tol).unwrap();
    let b = reverse_strip(&f).unwrap();
    assert_eq!(a.crease(), b.crease());
    assert!(max_abs_diff(a.alpha(), b.alpha()) < 1e-12);
}

#[test]
fn inverse_needs_admissibility() {
    let st = settings();
    let f = strip_with(Builtin::ArctanCurve, None, |_| 0.01, &st);
    assert_eq!(inverse(&f, &st.tol).unwrap_err().name(), "NotAdmissible");
    assert_eq!(inverse_dual(&f, &st.tol).unwrap_err().name(), "NotAdmissible");
}

#[test]
fn inverse_pair_signs() {
    let st = settings();
    for fx in common::battery(&st) {
        let q = IsomerQuartet::new(&fx.strip, &st.tol).unwrap();
        for i in 0..fx.strip.alpha().len() {
            assert!(q.f_inv.alpha()[i] * q.f.alpha()[i] > 0.0);
            assert_eq!(q.f_inv_dual.alpha()[i], -q.f_inv.alpha()[i]);
            assert_eq!(q.f_dual.alpha()[i], -q.f.alpha()[i]);
        }
        assert!(q.f_inv.beta_residual() < st.tol.beta && q.f_inv_dual.beta_residual() < st.tol.beta);
    }
}

#[test]
fn reverse_strip_is_an_involution_with_the_same_image() {
    let st = settings();
    let f = arctan_strip(&st);
    let r = reverse_strip(&f).unwrap();
    assert_eq!(reverse_strip(&r).unwrap(), f);
    let n = f.alpha().len();
    for i in 0..n {
        assert_eq!(r.alpha()[i], -f.alpha()[n - 1 - i]);
        assert!((r.beta()[i] - (PI - f.beta()[n - 1 - i])).abs() < 1e-9);
    }
    let (a, b) = (sample_mesh(&f, st.rulings).unwrap(), sample_mesh(&r, st.rulings).unwrap());
    let d = hausdorff(&a, &b, f.crease().points(), false, 0.0);
    assert!(d < st.tol.sym * f.crease().length(), "hausdorff {d}");
}

#[test]
fn reverse_on_torus_is_rejected() {
    let st = settings().with_resolution(512);
    let f = closed_c3_strip(&st);
    assert_eq!(reverse_strip(&f).unwrap_err().name(), "TorusDomain");
}

#[test]
fn first_family_member_at_zero_is_the_strip() {
    let st = settings().with_resolution(1024);
    let f = closed_c3_strip(&st);
    assert_eq!(closed_family(&f, 1, 0.0, &st.tol).unwrap().strip, f);
}

#[test]
fn family_members_satisfy_their_defining_relation() {
    let st = settings().with_resolution(1024);
    let f = closed_c3_strip(&st);
    let l = f.crease().length();
    for index in 1..=4u8 {
        for k in 0..8 {
            let m = closed_family(&f, index, k as f64 * l / 8.0, &st.tol).unwrap();
            let c = m.strip.crease();
            for i in 0..c.len() {
                assert!((c.kappa()[i] * m.strip.alpha()[i].cos() - f.mu()[i]).abs() < st.tol.beta);
                let positive = index % 2 == 1;
                assert_eq!(m.strip.alpha()[i] > 0.0, positive);
            }
            assert_eq!(m.strip.mu(), f.mu());
            assert!(m.strip.beta_residual() < st.tol.beta);
        }
    }
}

#[test]
fn second_family_is_dual_of_first() {
    let st = settings().with_resolution(1024);
    let f = closed_c3_strip(&st);
    let b = f.crease().length() / 8.0;
    let one = closed_family(&f, 1, b, &st.tol).unwrap().strip;
    let two = closed_family(&f, 2, b, &st.tol).unwrap().strip;
    assert_eq!(two, dual(&one));
}

#[test]
fn shifted_members_have_distinct_rulings() {
    let st = settings().with_resolution(1024);
    let f = closed_c3_strip(&st);
    let l = f.crease().length();
    let n = f.crease().len();
    let members: Vec<DevelopableStrip> = [0.0, 0.125, 0.25].iter().map(|b| closed_family(&f, 1, b * l, &st.tol).unwrap().strip).collect();
    // member with shift b = k·l/8 has sample i at the base point of sample i + k·n/8
    let steps = [0, n / 8, n / 4];
    for a in 0..3 {
        for b in a + 1..3 {
            let mut gap: f64 = 0.0;
            for i in 0..n {
                let (ia, ib) = ((i + n - steps[a]) % n, (i + n - steps[b]) % n);
                let (pa, pb) = (members[a].crease().points()[ia], members[b].crease().points()[ib]);
                assert!((pa - pb).norm() < 1e-9);
                gap = gap.max((members[a].ruling()[ia] - members[b].ruling()[ib]).norm());
            }
            assert!(gap > 1e-2, "members {a} and {b} share rulings");
        }
    }
}

#[test]
fn closed_family_errors() {
    let st = settings();
    let f = helix_strip(&st);
    assert_eq!(closed_family(&f, 1, 0.0, &st.tol).unwrap_err().name(), "NotClosed");
    let st = settings().with_resolution(512);
    let g = closed_c3_strip(&st);
    assert_eq!(closed_family(&g, 5, 0.0, &st.tol).unwrap_err().name(), "InvalidInput");
}

#[test]
fn mu_is_preserved_by_every_isomer() {
    let st = settings();
    for fx in common::battery(&st) {
        let q = IsomerQuartet::new(&fx.strip, &st.tol).unwrap();
        for m in q.members() {
            assert_eq!(m.mu(), fx.strip.mu(), "{}", fx.name);
        }
        let r = reverse_strip(&fx.strip).unwrap();
        let n = r.mu().len();
        for i in 0..n {
            assert_eq!(r.mu()[i], fx.strip.mu()[n - 1 - i]);
        }
    }
}

#[test]
fn inverse_dual_right_equivalence_matches_mu_symmetry() {
    let st = settings();
    for fx in common::battery(&st) {
        let q = IsomerQuartet::new(&fx.strip, &st.tol).unwrap();
        let sym = mu_symmetry(fx.strip.mu(), fx.strip.grid(), &st.tol).has_symmetry;
        assert_eq!(right_equivalent(&q.f, &q.f_inv_dual, &st.tol), sym, "{}", fx.name);
        let expected = if sym { 2 } else { 4 };
        assert_eq!(q.n_right_classes(&st.tol), expected, "{}", fx.name);
    }
    let st = settings();
    assert!(right_equivalent(&helix_strip(&st), &inverse_dual(&helix_strip(&st), &st.tol).unwrap(), &st.tol));
    let f = arctan_strip(&st);
    assert!(!right_equivalent(&f, &inverse_dual(&f, &st.tol).unwrap(), &st.tol));
}
