//! Small numerical kernels: finite differences, interpolation, integration
//! and rigid registration.

pub mod fd;
pub mod interp;
pub mod ode;
pub mod procrustes;
pub mod quad;

use nalgebra::{Vector2, Vector3};
use std::ops::{Add, Mul};

/// Values that can be linearly combined with real weights.
pub trait Linear: Copy + Add<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
}

impl Linear for f64 {
    fn zero() -> Self {
        0.0
    }
}

impl Linear for Vector3<f64> {
    fn zero() -> Self {
        Vector3::zeros()
    }
}

impl Linear for Vector2<f64> {
    fn zero() -> Self {
        Vector2::zeros()
    }
}

/// Central-difference derivative of a scalar function.
pub fn derivative(f: &dyn Fn(f64) -> f64, s: f64, h: f64, order: usize) -> f64 {
    let w = fd::central_weights(order);
    let p = (w.len() / 2) as f64;
    let mut acc = 0.0;
    for (k, wk) in w.iter().enumerate() {
        acc += wk * f(s + (k as f64 - p) * h);
    }
    acc / h.powi(order as i32)
}

/// Fourth-order first derivative using five nodes kept inside [lo, hi]
/// (shifted one-sided near the ends).
pub fn derivative_within(f: &dyn Fn(f64) -> f64, s: f64, h: f64, lo: f64, hi: f64) -> f64 {
    let first = (s - 2.0 * h).clamp(lo, (hi - 4.0 * h).max(lo));
    let nodes: Vec<f64> = (0..5).map(|k| first + k as f64 * h).collect();
    let w = fd::fornberg(s, &nodes, 1).swap_remove(1);
    nodes.iter().zip(w).map(|(x, wk)| wk * f(*x)).sum()
}
