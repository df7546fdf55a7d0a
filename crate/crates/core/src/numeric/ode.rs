//! Classic fixed-step Runge-Kutta.

pub fn rk4_step<const N: usize>(
    f: &dyn Fn(f64, &[f64; N]) -> [f64; N],
    s: f64,
    y: &[f64; N],
    h: f64,
) -> [f64; N] {
    let axpy = |a: &[f64; N], k: &[f64; N], c: f64| -> [f64; N] {
        let mut out = *a;
        for i in 0..N {
            out[i] += c * k[i];
        }
        out
    };
    let k1 = f(s, y);
    let k2 = f(s + 0.5 * h, &axpy(y, &k1, 0.5 * h));
    let k3 = f(s + 0.5 * h, &axpy(y, &k2, 0.5 * h));
    let k4 = f(s + h, &axpy(y, &k3, h));
    let mut out = *y;
    for i in 0..N {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Integrates `steps` steps of size `h` from `(s0, y0)`, returning every state
/// including the initial one.
pub fn rk4<const N: usize>(
    f: &dyn Fn(f64, &[f64; N]) -> [f64; N],
    s0: f64,
    y0: [f64; N],
    h: f64,
    steps: usize,
) -> Vec<[f64; N]> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(y0);
    let mut y = y0;
    for k in 0..steps {
        y = rk4_step(f, s0 + k as f64 * h, &y, h);
        out.push(y);
    }
    out
}
