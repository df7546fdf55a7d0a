//! Gauss-Legendre quadrature and an invertible arc-length map.

const GL5_X: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_664,
];
const GL5_W: [f64; 5] = [
    0.236_926_885_056_189_08,
    0.478_628_670_499_366_47,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_47,
    0.236_926_885_056_189_08,
];

/// Five-point Gauss-Legendre rule on [a, b].
pub fn gauss5(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let m = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    GL5_X.iter().zip(GL5_W).map(|(x, w)| w * f(m + r * x)).sum::<f64>() * r
}

/// Cumulative arc length of a parametrized curve given its speed.
pub struct ArcLength<'a> {
    speed: Box<dyn Fn(f64) -> f64 + Sync + 'a>,
    knots: Vec<f64>,
    cumulative: Vec<f64>,
}

impl<'a> ArcLength<'a> {
    pub fn new(speed: impl Fn(f64) -> f64 + Sync + 'a, t0: f64, t1: f64, segments: usize) -> Self {
        let dt = (t1 - t0) / segments as f64;
        let knots: Vec<f64> = (0..=segments).map(|k| t0 + k as f64 * dt).collect();
        let mut cumulative = Vec::with_capacity(segments + 1);
        cumulative.push(0.0);
        let mut acc = 0.0;
        for k in 0..segments {
            acc += gauss5(&speed, knots[k], knots[k + 1]);
            cumulative.push(acc);
        }
        Self { speed: Box::new(speed), knots, cumulative }
    }

    pub fn length(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }

    /// Parameter where the arc length from the start equals `s`.
    pub fn param_at(&self, s: f64) -> f64 {
        let n = self.knots.len() - 1;
        let s = s.clamp(0.0, self.length());
        let k = self.cumulative.partition_point(|&c| c <= s).clamp(1, n) - 1;
        let (a, b) = (self.knots[k], self.knots[k + 1]);
        let mut t = a + (b - a) * (s - self.cumulative[k]) / (self.cumulative[k + 1] - self.cumulative[k]);
        for _ in 0..30 {
            let g = self.cumulative[k] + gauss5(&*self.speed, a, t) - s;
            let dt = g / (self.speed)(t);
            t = (t - dt).clamp(a, b);
            if dt.abs() < 1e-15 * (1.0 + t.abs()) {
                break;
            }
        }
        t
    }
}
