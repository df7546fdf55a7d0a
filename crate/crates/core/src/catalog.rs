//! Built-in example curves.

use crate::curve::{Domain, Parametric2, Parametric3, PlaneCurve, SpaceCurve, V2, V3};
use crate::error::{GeometryError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    /// (cos(s/√2), sin(s/√2), s/√2), κ = τ = 1/2.
    Helix,
    /// (arctan s, log(1+s²)/√2, s − arctan s), κ = τ = √2/(1+s²).
    ArctanCurve,
    /// (cos t, sin(t+d), t).
    PerturbedHelix { d: f64 },
    /// ((2 + cos mt) cos t, (2 + cos mt) sin t, sin mt), closed.
    TorusCurve { m: f64 },
    /// (2t/3 − sin t, 1 − cos t) in the plane.
    Trochoid,
    /// (cos t, a sin t) in the plane, closed.
    Ellipse { a: f64 },
    /// (cos s, sin s, 0) for |s| ≤ π/4.
    QuarterCircle,
}

struct Plane(Builtin);

impl Builtin {
    /// Looks up a built-in by name; missing parameters take their defaults.
    pub fn from_name(name: &str, args: &[f64]) -> Result<Self> {
        let arg = |default: f64| -> Result<f64> {
            match args {
                [] => Ok(default),
                [x] => Ok(*x),
                _ => Err(GeometryError::InvalidInput(format!("{name} takes at most one parameter"))),
            }
        };
        let none = || -> Result<()> {
            if args.is_empty() {
                Ok(())
            } else {
                Err(GeometryError::InvalidInput(format!("{name} takes no parameters")))
            }
        };
        Ok(match name {
            "helix" => none().map(|_| Builtin::Helix)?,
            "arctan_curve" => none().map(|_| Builtin::ArctanCurve)?,
            "perturbed_helix" => Builtin::PerturbedHelix { d: arg(0.1)? },
            "torus_curve" => Builtin::TorusCurve { m: arg(3.0)? },
            "trochoid" => none().map(|_| Builtin::Trochoid)?,
            "ellipse" => Builtin::Ellipse { a: arg(1.2)? },
            "circle" => none().map(|_| Builtin::Ellipse { a: 1.0 })?,
            "quarter_circle" => none().map(|_| Builtin::QuarterCircle)?,
            _ => return Err(GeometryError::InvalidInput(format!("unknown example `{name}`"))),
        })
    }

    pub fn all() -> [Builtin; 7] {
        [
            Builtin::Helix,
            Builtin::ArctanCurve,
            Builtin::PerturbedHelix { d: 0.1 },
            Builtin::TorusCurve { m: 3.0 },
            Builtin::Trochoid,
            Builtin::Ellipse { a: 1.2 },
            Builtin::QuarterCircle,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Helix => "helix",
            Builtin::ArctanCurve => "arctan_curve",
            Builtin::PerturbedHelix { .. } => "perturbed_helix",
            Builtin::TorusCurve { .. } => "torus_curve",
            Builtin::Trochoid => "trochoid",
            Builtin::Ellipse { .. } => "ellipse",
            Builtin::QuarterCircle => "quarter_circle",
        }
    }

    pub fn formula(&self) -> String {
        match self {
            Builtin::Helix => "(cos(s/√2), sin(s/√2), s/√2), s in [-2, 2]".into(),
            Builtin::ArctanCurve => "(arctan s, log(1+s²)/√2, s - arctan s), s in [0.1, 0.9]".into(),
            Builtin::PerturbedHelix { d } => format!("(cos t, sin(t+{d}), t), t in [3π/8, 5π/8]"),
            Builtin::TorusCurve { m } => format!("((2+cos {m}t) cos t, (2+cos {m}t) sin t, sin {m}t), t in [0, 2π), closed"),
            Builtin::Trochoid => "(2t/3 - sin t, 1 - cos t), t in [0, 2π], planar".into(),
            Builtin::Ellipse { a } => format!("(cos t, {a} sin t), t in [0, 2π), planar, closed"),
            Builtin::QuarterCircle => "(cos s, sin s, 0), s in [-π/4, π/4]".into(),
        }
    }

    /// What the example is used to demonstrate.
    pub fn role(&self) -> &'static str {
        match self {
            Builtin::Helix => "constant curvature and torsion 1/2; the dual is the half-turn of the strip about the principal normal line at the midpoint, and a constant first angular function gives two right-equivalence classes",
            Builtin::ArctanCurve => "non-planar crease without symmetries; with a linear first angular function all four isomers are mutually non-congruent",
            Builtin::PerturbedHelix { .. } => "helix perturbation with decreasing curvature on the interval; admissible for a constant angle pi/3 when d <= pi/5, and input data for the equal mean curvature torsion solver",
            Builtin::TorusCurve { .. } => "closed crease on a torus with a threefold rotational symmetry; used with an ellipse generator for the closed-crease census",
            Builtin::Trochoid => "generator whose curvature is 2pi-periodic; the arc over [0, 2pi] is simple while the arc over [pi, 3pi] crosses itself",
            Builtin::Ellipse { .. } => "closed generator whose curvature, rescaled to the torus curve length, drives the closed-crease families",
            Builtin::QuarterCircle => "planar crease with a reflective symmetry; the angle pi/4 - s/2 gives four distinct curved foldings",
        }
    }

    pub fn default_domain(&self) -> (f64, f64) {
        match self {
            Builtin::Helix => (-2.0, 2.0),
            Builtin::ArctanCurve => (0.1, 0.9),
            Builtin::PerturbedHelix { .. } => (3.0 * PI / 8.0, 5.0 * PI / 8.0),
            Builtin::TorusCurve { .. } | Builtin::Trochoid | Builtin::Ellipse { .. } => (0.0, 2.0 * PI),
            Builtin::QuarterCircle => (-PI / 4.0, PI / 4.0),
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Builtin::TorusCurve { .. } | Builtin::Ellipse { .. })
    }

    pub fn is_plane_curve(&self) -> bool {
        matches!(self, Builtin::Trochoid | Builtin::Ellipse { .. } | Builtin::QuarterCircle)
    }

    fn jet2(&self, t: f64) -> Option<[V2; 3]> {
        let (s, c) = t.sin_cos();
        match *self {
            Builtin::Trochoid => Some([
                V2::new(2.0 * t / 3.0 - s, 1.0 - c),
                V2::new(2.0 / 3.0 - c, s),
                V2::new(s, c),
            ]),
            Builtin::Ellipse { a } => Some([V2::new(c, a * s), V2::new(-s, a * c), V2::new(-c, -a * s)]),
            Builtin::QuarterCircle => Some([V2::new(c, s), V2::new(-s, c), V2::new(-c, -s)]),
            _ => None,
        }
    }

    /// Samples the crease over `domain` (default when `None`) with `n`
    /// intervals. Closed examples are sampled over one period.
    pub fn space_curve(&self, n: usize, domain: Option<(f64, f64)>) -> Result<SpaceCurve> {
        let (t0, t1) = domain.unwrap_or_else(|| self.default_domain());
        let kind = if self.is_closed() && domain.is_none() { Domain::Torus } else { Domain::Interval };
        SpaceCurve::from_parametric(self, t0, t1, kind, n)
    }

    /// Plane examples as plane curves (n intervals).
    pub fn plane_curve(&self, n: usize, domain: Option<(f64, f64)>) -> Result<PlaneCurve> {
        if !self.is_plane_curve() {
            return Err(GeometryError::InvalidInput(format!("{} is not a plane curve", self.name())));
        }
        let (t0, t1) = domain.unwrap_or_else(|| self.default_domain());
        PlaneCurve::from_parametric(&Plane(*self), t0, t1, n, self.is_closed() && domain.is_none())
    }
}

impl Parametric2 for Plane {
    fn jet(&self, t: f64) -> [V2; 3] {
        self.0.jet2(t).expect("plane example")
    }
}

impl Parametric3 for Builtin {
    fn jet(&self, t: f64) -> [V3; 4] {
        let (s, c) = t.sin_cos();
        match *self {
            Builtin::Helix => {
                let k = FRAC_1_SQRT_2;
                let (sk, ck) = (k * t).sin_cos();
                [
                    V3::new(ck, sk, k * t),
                    V3::new(-k * sk, k * ck, k),
                    V3::new(-k * k * ck, -k * k * sk, 0.0),
                    V3::new(k * k * k * sk, -k * k * k * ck, 0.0),
                ]
            }
            Builtin::ArctanCurve => {
                let q = 1.0 + t * t;
                [
                    V3::new(t.atan(), q.ln() / SQRT_2, t - t.atan()),
                    V3::new(1.0 / q, SQRT_2 * t / q, t * t / q),
                    V3::new(-2.0 * t / (q * q), SQRT_2 * (1.0 - t * t) / (q * q), 2.0 * t / (q * q)),
                    V3::new(
                        (6.0 * t * t - 2.0) / q.powi(3),
                        SQRT_2 * (2.0 * t.powi(3) - 6.0 * t) / q.powi(3),
                        (2.0 - 6.0 * t * t) / q.powi(3),
                    ),
                ]
            }
            Builtin::PerturbedHelix { d } => {
                let (sd, cd) = (t + d).sin_cos();
                [
                    V3::new(c, sd, t),
                    V3::new(-s, cd, 1.0),
                    V3::new(-c, -sd, 0.0),
                    V3::new(s, -cd, 0.0),
                ]
            }
            Builtin::TorusCurve { m } => {
                let (sm, cm) = (m * t).sin_cos();
                let r = [2.0 + cm, -m * sm, -m * m * cm, m * m * m * sm];
                [
                    V3::new(r[0] * c, r[0] * s, sm),
                    V3::new(r[1] * c - r[0] * s, r[1] * s + r[0] * c, m * cm),
                    V3::new(r[2] * c - 2.0 * r[1] * s - r[0] * c, r[2] * s + 2.0 * r[1] * c - r[0] * s, -m * m * sm),
                    V3::new(
                        r[3] * c - 3.0 * r[2] * s - 3.0 * r[1] * c + r[0] * s,
                        r[3] * s + 3.0 * r[2] * c - 3.0 * r[1] * s - r[0] * c,
                        -m * m * m * cm,
                    ),
                ]
            }
            _ => {
                let j = self.jet2(t).expect("plane example");
                let up = |v: V2| V3::new(v.x, v.y, 0.0);
                [up(j[0]), up(j[1]), up(j[2]), V3::zeros()]
            }
        }
    }
}
