//! Finite-difference weights and uniform-grid derivatives.

use super::Linear;

/// Fornberg's recursion: `c[k][j]` is the weight of `nodes[j]` in the k-th
/// derivative at `x0`.
pub fn fornberg(x0: f64, nodes: &[f64], m: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; n]; m + 1];
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

fn central_half_width(order: usize) -> usize {
    if order <= 2 { 2 } else { 3 }
}

/// Fourth-order central weights for unit spacing.
pub fn central_weights(order: usize) -> Vec<f64> {
    let p = central_half_width(order) as i64;
    let nodes: Vec<f64> = (-p..=p).map(|k| k as f64).collect();
    fornberg(0.0, &nodes, order).swap_remove(order)
}

/// Derivative of uniformly spaced samples. Interior points use central
/// stencils; interval ends fall back to shifted one-sided stencils.
pub fn differentiate<T: Linear>(values: &[T], h: f64, order: usize, periodic: bool) -> Vec<T> {
    let n = values.len();
    let p = central_half_width(order);
    let central = central_weights(order);
    let scale = 1.0 / h.powi(order as i32);
    let window = order + 4;
    assert!(n >= window, "too few samples for a derivative of order {order}");
    (0..n)
        .map(|i| {
            let mut acc = T::zero();
            if periodic || (i >= p && i + p < n) {
                for (k, w) in central.iter().enumerate() {
                    let j = (i + n + k - p) % n;
                    acc = acc + values[j] * *w;
                }
            } else {
                let start = i.saturating_sub(window / 2).min(n - window);
                let nodes: Vec<f64> = (start..start + window).map(|j| j as f64).collect();
                let w = &fornberg(i as f64, &nodes, order)[order];
                for (k, wk) in w.iter().enumerate() {
                    acc = acc + values[start + k] * *wk;
                }
            }
            acc * scale
        })
        .collect()
}
