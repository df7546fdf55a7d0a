//! Dual, inverse, inverse dual, reverse, and the closed-crease families.

use crate::config::Tolerances;
use crate::curve::SpaceCurve;
use crate::error::{GeometryError, Result};
use crate::strip::DevelopableStrip;

/// Strip along `target` with the same geodesic curvature as `strip`:
/// κ_target cos α̃ = μ, with α̃ = sign · sgn(α) · |α̃|.
pub fn transplant(strip: &DevelopableStrip, target: &SpaceCurve, sign: i8, tol: &Tolerances) -> Result<DevelopableStrip> {
    if sign != 1 && sign != -1 {
        return Err(GeometryError::InvalidInput(format!("sign must be +1 or -1, got {sign}")));
    }
    let sf = strip.alpha_sign();
    if sf == 0 {
        return Err(GeometryError::UnsupportedSignChange);
    }
    let src = strip.crease();
    if target.len() != src.len() || target.domain() != src.domain() || (target.length() - src.length()).abs() > tol.len * src.length() {
        return Err(GeometryError::GridMismatch("target curve is sampled differently from the strip".into()));
    }
    let mu = strip.mu();
    let kappa = target.kappa();
    let worst = (0..mu.len()).min_by(|&i, &j| (kappa[i] - mu[i].abs()).total_cmp(&(kappa[j] - mu[j].abs()))).unwrap();
    if !(mu[worst].abs() < kappa[worst] - tol.kappa) {
        return Err(GeometryError::IncompatibleCurve { s: target.s()[worst], kappa: kappa[worst], mu: mu[worst] });
    }
    let s = (sign * sf) as f64;
    let alpha = mu.iter().zip(kappa).map(|(m, k)| s * (m / k).clamp(-1.0, 1.0).acos()).collect();
    DevelopableStrip::assemble(target.clone(), alpha, mu.to_vec(), strip.width(), tol)
}

pub fn dual(strip: &DevelopableStrip) -> DevelopableStrip {
    strip.dual()
}

/// Inverse: transplant onto the reversed crease with the same sign of α.
pub fn inverse(strip: &DevelopableStrip, tol: &Tolerances) -> Result<DevelopableStrip> {
    strip.require_admissible(tol)?;
    transplant(strip, &strip.crease().reversed(), 1, tol)
}

pub fn inverse_dual(strip: &DevelopableStrip, tol: &Tolerances) -> Result<DevelopableStrip> {
    strip.require_admissible(tol)?;
    transplant(strip, &strip.crease().reversed(), -1, tol)
}

pub fn reverse_strip(strip: &DevelopableStrip) -> Result<DevelopableStrip> {
    strip.reversed()
}

/// F, its dual, inverse and inverse dual.
#[derive(Debug, Clone, PartialEq)]
pub struct IsomerQuartet {
    pub f: DevelopableStrip,
    pub f_dual: DevelopableStrip,
    pub f_inv: DevelopableStrip,
    pub f_inv_dual: DevelopableStrip,
}

impl IsomerQuartet {
    pub fn new(f: &DevelopableStrip, tol: &Tolerances) -> Result<Self> {
        Ok(Self { f: f.clone(), f_dual: f.dual(), f_inv: inverse(f, tol)?, f_inv_dual: inverse_dual(f, tol)? })
    }

    pub fn members(&self) -> [&DevelopableStrip; 4] {
        [&self.f, &self.f_dual, &self.f_inv, &self.f_inv_dual]
    }

    pub const NAMES: [&'static str; 4] = ["F", "dual", "inverse", "inverse_dual"];

    /// Right-equivalence classes by normal-form comparison, as class
    /// labels in member order.
    pub fn right_classes(&self, tol: &Tolerances) -> [usize; 4] {
        let m = self.members();
        let mut label = [0, 1, 2, 3];
        for i in 0..4 {
            for j in 0..i {
                if right_equivalent(m[i], m[j], tol) {
                    label[i] = label[j];
                    break;
                }
            }
        }
        label
    }

    pub fn n_right_classes(&self, tol: &Tolerances) -> usize {
        let mut l = self.right_classes(tol).to_vec();
        l.sort_unstable();
        l.dedup();
        l.len()
    }
}

fn same_crease(a: &SpaceCurve, b: &SpaceCurve, reversed: bool) -> bool {
    if a.len() != b.len() || (a.length() - b.length()).abs() > 1e-9 * a.length() {
        return false;
    }
    let tol = 1e-9 * a.length();
    let sign = if reversed { -1.0 } else { 1.0 };
    (0..a.len()).all(|i| {
        let j = if reversed { b.mirror_index(i) } else { i };
        (a.points()[i] - b.points()[j]).norm() < tol && (a.tangents()[i] - b.tangents()[j] * sign).norm() < 1e-7
    })
}

/// Normal forms over the same crease image are right-equivalent iff they
/// coincide or one is the reverse of the other.
pub fn right_equivalent(a: &DevelopableStrip, b: &DevelopableStrip, tol: &Tolerances) -> bool {
    let (ca, cb) = (a.crease(), b.crease());
    let close = |x: &[f64], y: &dyn Fn(usize) -> f64| x.iter().enumerate().all(|(i, v)| (v - y(i)).abs() < tol.beta);
    if same_crease(ca, cb, false) && close(a.alpha(), &|i| b.alpha()[i]) {
        return true;
    }
    same_crease(ca, cb, true) && close(a.alpha(), &|i| -b.alpha()[cb.mirror_index(i)])
}

/// F_b^i on a closed crease.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFamilyMember {
    pub index: u8,
    pub shift: f64,
    pub strip: DevelopableStrip,
}

/// Member i ∈ {1,2,3,4} with shift b: crease c(s + b) for i = 1, 2 and
/// c(−s + b) for i = 3, 4; κ_new cos α = μ_F, α¹ and α³ carry the sign of
/// α_F, α² and α⁴ the opposite one.
pub fn closed_family(f: &DevelopableStrip, index: u8, shift: f64, tol: &Tolerances) -> Result<ClosedFamilyMember> {
    if !f.crease().is_closed() {
        return Err(GeometryError::NotClosed);
    }
    f.require_admissible(tol)?;
    if !(1..=4).contains(&index) {
        return Err(GeometryError::InvalidInput(format!("family index must be 1..=4, got {index}")));
    }
    let b = shift.rem_euclid(f.crease().length());
    if index == 1 && b == 0.0 {
        return Ok(ClosedFamilyMember { index, shift: b, strip: f.clone() });
    }
    let shifted = f.crease().shifted(b)?;
    let crease = if index <= 2 { shifted } else { shifted.reversed() };
    let sign = if index % 2 == 1 { 1 } else { -1 };
    let strip = transplant(f, &crease, sign, tol)?;
    Ok(ClosedFamilyMember { index, shift: b, strip })
}
