//! Local Lagrange interpolation on uniform grids.

use super::Linear;

const POINTS: usize = 6;

/// A uniform grid `start + i·h`, `i < len`. A periodic grid wraps with
/// period `len·h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub h: f64,
    pub len: usize,
    pub periodic: bool,
}

impl UniformGrid {
    pub fn period(&self) -> f64 {
        self.h * self.len as f64
    }

    /// Index of a sample lying at `s` (up to rounding), if any.
    pub fn exact_index(&self, s: f64) -> Option<usize> {
        let mut x = (s - self.start) / self.h;
        if self.periodic {
            x = x.rem_euclid(self.len as f64);
        }
        let r = x.round();
        if (x - r).abs() > 1e-9 {
            return None;
        }
        let mut i = r as i64;
        if self.periodic {
            i = i.rem_euclid(self.len as i64);
        }
        (0..self.len as i64).contains(&i).then_some(i as usize)
    }

    /// Indices and weights of the interpolation stencil at `s`.
    pub fn stencil(&self, s: f64) -> ([usize; POINTS], [f64; POINTS]) {
        let x = (s - self.start) / self.h;
        let base = x.floor() as i64 - (POINTS as i64 / 2 - 1);
        let first = if self.periodic {
            base
        } else {
            base.clamp(0, self.len as i64 - POINTS as i64)
        };
        let mut idx = [0; POINTS];
        let mut w = [0.0; POINTS];
        for k in 0..POINTS {
            let j = first + k as i64;
            idx[k] = if self.periodic { j.rem_euclid(self.len as i64) as usize } else { j as usize };
            let mut l = 1.0;
            for m in 0..POINTS {
                if m != k {
                    let jm = (first + m as i64) as f64;
                    l *= (x - jm) / (j as f64 - jm);
                }
            }
            w[k] = l;
        }
        (idx, w)
    }

    pub fn eval<T: Linear>(&self, values: &[T], s: f64) -> T {
        debug_assert_eq!(values.len(), self.len);
        if let Some(i) = self.exact_index(s) {
            return values[i];
        }
        let (idx, w) = self.stencil(s);
        let mut acc = T::zero();
        for k in 0..POINTS {
            acc = acc + values[idx[k]] * w[k];
        }
        acc
    }
}
