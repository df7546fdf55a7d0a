//! Least-squares rigid registration of matched point sets.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

/// x ↦ rotation·x + translation, with `rotation` orthogonal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry3 {
    pub rotation: Matrix3<f64>,
    pub translation: Vector3<f64>,
}

impl Isometry3 {
    pub fn identity() -> Self {
        Self { rotation: Matrix3::identity(), translation: Vector3::zeros() }
    }

    pub fn apply(&self, p: &Vector3<f64>) -> Vector3<f64> {
        self.rotation * p + self.translation
    }

    /// +1 for proper motions, -1 for reflections.
    pub fn sign(&self) -> i8 {
        if self.rotation.determinant() >= 0.0 { 1 } else { -1 }
    }

    pub fn compose(&self, inner: &Isometry3) -> Isometry3 {
        Isometry3 {
            rotation: self.rotation * inner.rotation,
            translation: self.rotation * inner.translation + self.translation,
        }
    }

    pub fn inverse(&self) -> Isometry3 {
        let rt = self.rotation.transpose();
        Isometry3 { rotation: rt, translation: -(rt * self.translation) }
    }

    /// Reflection across the plane through `point` with unit `normal`.
    pub fn reflection(point: &Vector3<f64>, normal: &Vector3<f64>) -> Isometry3 {
        let r = Matrix3::identity() - 2.0 * normal * normal.transpose();
        Isometry3 { rotation: r, translation: point - r * point }
    }

    /// Rotation by `angle` about the line through `point` with unit `axis`.
    pub fn rotation_about(point: &Vector3<f64>, axis: &Vector3<f64>, angle: f64) -> Isometry3 {
        let r = *nalgebra::Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(*axis), angle).matrix();
        Isometry3 { rotation: r, translation: point - r * point }
    }

    /// Deviation of rotationᵀ·rotation from the identity.
    pub fn orthogonality_error(&self) -> f64 {
        (self.rotation.transpose() * self.rotation - Matrix3::identity()).abs().max()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidFit {
    pub isometry: Isometry3,
    pub max_residual: f64,
    pub rms: f64,
}

/// Best orthogonal map taking `source[i]` to `target[i]`. With
/// `allow_reflection` the determinant is left free.
pub fn fit(source: &[Vector3<f64>], target: &[Vector3<f64>], allow_reflection: bool) -> RigidFit {
    assert_eq!(source.len(), target.len());
    assert!(!source.is_empty());
    let n = source.len() as f64;
    let ca = source.iter().sum::<Vector3<f64>>() / n;
    let cb = target.iter().sum::<Vector3<f64>>() / n;
    let mut h = Matrix3::zeros();
    for (a, b) in source.iter().zip(target) {
        h += (a - ca) * (b - cb).transpose();
    }
    let svd = h.svd(true, true);
    let u = svd.u.unwrap();
    let v = svd.v_t.unwrap().transpose();
    let mut r = v * u.transpose();
    if !allow_reflection && r.determinant() < 0.0 {
        let mut v2 = v;
        let k = (0..3).min_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j])).unwrap();
        v2.column_mut(k).neg_mut();
        r = v2 * u.transpose();
    }
    let isometry = Isometry3 { rotation: r, translation: cb - r * ca };
    let mut max_residual: f64 = 0.0;
    let mut sq = 0.0;
    for (a, b) in source.iter().zip(target) {
        let d = (isometry.apply(a) - b).norm();
        max_residual = max_residual.max(d);
        sq += d * d;
    }
    RigidFit { isometry, max_residual, rms: (sq / n).sqrt() }
}

/// Residual of a given map on matched points.
pub fn residual(t: &Isometry3, source: &[Vector3<f64>], target: &[Vector3<f64>]) -> f64 {
    source.iter().zip(target).map(|(a, b)| (t.apply(a) - b).norm()).fold(0.0, f64::max)
}
