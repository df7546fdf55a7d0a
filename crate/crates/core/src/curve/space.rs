use super::{arc_grid, Domain, Parametric3, V3};
use crate::config::Tolerances;
use crate::error::{GeometryError, Result};
use crate::numeric::fd::{differentiate, fornberg};
use crate::numeric::interp::UniformGrid;
use crate::numeric::ode::rk4;
use crate::numeric::procrustes::Isometry3;
use crate::numeric::quad::{gauss5, ArcLength};

/// Position and Frenet frame at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub point: V3,
    pub e: V3,
    pub n: V3,
    pub b: V3,
}

impl Default for Frame {
    fn default() -> Self {
        Self { point: V3::zeros(), e: V3::x(), n: V3::y(), b: V3::z() }
    }
}

/// Curve sampled uniformly in arc length with its Frenet apparatus.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceCurve {
    domain: Domain,
    length: f64,
    s: Vec<f64>,
    native: Vec<f64>,
    points: Vec<V3>,
    tangent: Vec<V3>,
    normal: Vec<V3>,
    binormal: Vec<V3>,
    kappa: Vec<f64>,
    tau: Vec<f64>,
}

/// Worst-case violations of the sampling invariants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveDiagnostics {
    /// max (|c_{i+1} − c_i| − h), absolute.
    pub chord_excess: f64,
    pub min_kappa: f64,
    pub frame_error: f64,
    /// Largest mismatch across the seam of a closed curve, zero otherwise.
    pub periodic_gap: f64,
}

fn orthonormalize(e: V3, n: V3) -> (V3, V3, V3) {
    let e = e.normalize();
    let n = (n - e * e.dot(&n)).normalize();
    (e, n, e.cross(&n))
}

impl SpaceCurve {
    /// Frenet data from exact derivatives of a parametrization over
    /// [t0, t1] (one period when `domain` is a torus).
    pub fn from_parametric(curve: &dyn Parametric3, t0: f64, t1: f64, domain: Domain, n: usize) -> Result<Self> {
        let map = ArcLength::new(|t| curve.jet(t)[1].norm(), t0, t1, (4 * n).max(256));
        let length = map.length();
        if length < 1e-12 {
            return Err(GeometryError::DegenerateCurve { length });
        }
        let s = arc_grid(domain, length, n);
        let offset = match domain {
            Domain::Interval => 0.5 * length,
            Domain::Torus => 0.0,
        };
        let m = s.len();
        let mut out = Self::empty(domain, length, s);
        for i in 0..m {
            let t = map.param_at(out.s[i] + offset);
            let [c, d1, d2, d3] = curve.jet(t);
            let cr = d1.cross(&d2);
            let speed = d1.norm();
            let kappa = cr.norm() / speed.powi(3);
            if kappa <= 1e-9 {
                return Err(GeometryError::VanishingCurvature { s: out.s[i], kappa });
            }
            let e = d1 / speed;
            let b = cr.normalize();
            out.native.push(t);
            out.points.push(c);
            out.tangent.push(e);
            out.normal.push(b.cross(&e));
            out.binormal.push(b);
            out.kappa.push(kappa);
            out.tau.push(cr.dot(&d3) / cr.norm_squared());
        }
        Ok(out)
    }

    fn empty(domain: Domain, length: f64, s: Vec<f64>) -> Self {
        let m = s.len();
        Self {
            domain,
            length,
            s,
            native: Vec::with_capacity(m),
            points: Vec::with_capacity(m),
            tangent: Vec::with_capacity(m),
            normal: Vec::with_capacity(m),
            binormal: Vec::with_capacity(m),
            kappa: Vec::with_capacity(m),
            tau: Vec::with_capacity(m),
        }
    }

    /// Frenet data from uniformly spaced points by finite differences.
    pub fn from_uniform_points(domain: Domain, length: f64, points: Vec<V3>, native: Vec<f64>) -> Result<Self> {
        let m = points.len();
        let n = match domain {
            Domain::Interval => m - 1,
            Domain::Torus => m,
        };
        let h = length / n as f64;
        let periodic = domain == Domain::Torus;
        let d1 = differentiate(&points, h, 1, periodic);
        let d2 = differentiate(&points, h, 2, periodic);
        let d3 = differentiate(&points, h, 3, periodic);
        let mut out = Self::empty(domain, length, arc_grid(domain, length, n));
        out.native = native;
        for i in 0..m {
            let cr = d1[i].cross(&d2[i]);
            let speed = d1[i].norm();
            let kappa = cr.norm() / speed.powi(3);
            if !(kappa > 1e-9) {
                return Err(GeometryError::VanishingCurvature { s: out.s[i], kappa });
            }
            let e = d1[i] / speed;
            let b = cr.normalize();
            out.tangent.push(e);
            out.normal.push(b.cross(&e));
            out.binormal.push(b);
            out.kappa.push(kappa);
            out.tau.push(cr.dot(&d3[i]) / cr.norm_squared());
        }
        out.points = points;
        Ok(out)
    }

    /// Reparametrizes raw samples by arc length with `n` intervals. On a
    /// torus the samples are read cyclically (no repeated end point).
    pub fn resample_by_arclength(points: &[V3], domain: Domain, n: usize) -> Result<Self> {
        let (length, pts) = resample_points(points, domain == Domain::Torus, n)?;
        let s = arc_grid(domain, length, n);
        Self::from_uniform_points(domain, length, pts, s)
    }

    /// Integrates the Frenet-Serret system from the given frame at s = 0.
    /// Interval curves span [−l/2, l/2] and need an even `n`.
    pub fn from_kappa_tau(
        kappa: &(dyn Fn(f64) -> f64 + Sync),
        tau: &(dyn Fn(f64) -> f64 + Sync),
        length: f64,
        frame: Frame,
        domain: Domain,
        n: usize,
        tol: &Tolerances,
    ) -> Result<Self> {
        let deviation = [
            frame.e.norm() - 1.0,
            frame.n.norm() - 1.0,
            frame.b.norm() - 1.0,
            frame.e.dot(&frame.n),
            frame.e.dot(&frame.b),
            frame.n.dot(&frame.b),
            (frame.e.cross(&frame.n) - frame.b).norm(),
        ]
        .iter()
        .fold(0.0f64, |a, x| a.max(x.abs()));
        if deviation > tol.frame {
            return Err(GeometryError::NonOrthonormalFrame { deviation });
        }
        if domain == Domain::Interval && n % 2 != 0 {
            return Err(GeometryError::InvalidInput("interval reconstruction needs an even resolution".into()));
        }
        let s = arc_grid(domain, length, n);
        let h = length / n as f64;
        let first = s[0];
        for k in 0..=2 * n {
            let x = first + 0.5 * h * k as f64;
            let kx = kappa(x);
            if !(kx > 0.0) {
                return Err(GeometryError::NonPositiveKappa { s: x, kappa: kx });
            }
        }
        let rhs = |x: f64, y: &[f64; 12]| -> [f64; 12] {
            let (k, t) = (kappa(x), tau(x));
            [
                y[3],
                y[4],
                y[5],
                k * y[6],
                k * y[7],
                k * y[8],
                -k * y[3] + t * y[9],
                -k * y[4] + t * y[10],
                -k * y[5] + t * y[11],
                -t * y[6],
                -t * y[7],
                -t * y[8],
            ]
        };
        let mut y0 = [0.0; 12];
        for (k, v) in [frame.point, frame.e, frame.n, frame.b].iter().enumerate() {
            y0[3 * k..3 * k + 3].copy_from_slice(v.as_slice());
        }
        let states: Vec<[f64; 12]> = match domain {
            Domain::Interval => {
                let half = n / 2;
                let fwd = rk4(&rhs, 0.0, y0, h, half);
                let bwd = rk4(&rhs, 0.0, y0, -h, half);
                bwd.into_iter().rev().chain(fwd.into_iter().skip(1)).collect()
            }
            Domain::Torus => {
                let mut all = rk4(&rhs, 0.0, y0, h, n);
                let end = all.pop().unwrap();
                let gap = (0..12).map(|i| (end[i] - y0[i]).abs() / if i < 3 { length } else { 1.0 }).fold(0.0, f64::max);
                if gap > tol.periodic {
                    return Err(GeometryError::NotPeriodic { gap });
                }
                all
            }
        };
        if states.iter().flatten().any(|v| !v.is_finite()) {
            return Err(GeometryError::IntegrationFailure("non-finite state".into()));
        }
        let mut out = Self::empty(domain, length, s.clone());
        out.native = s;
        for (i, y) in states.iter().enumerate() {
            let v = |k: usize| V3::new(y[3 * k], y[3 * k + 1], y[3 * k + 2]);
            let (e, nn, b) = orthonormalize(v(1), v(2));
            out.points.push(v(0));
            out.tangent.push(e);
            out.normal.push(nn);
            out.binormal.push(b);
            out.kappa.push(kappa(out.s[i]));
            out.tau.push(tau(out.s[i]));
        }
        Ok(out)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }
    pub fn is_closed(&self) -> bool {
        self.domain == Domain::Torus
    }
    pub fn length(&self) -> f64 {
        self.length
    }
    /// Number of samples.
    pub fn len(&self) -> usize {
        self.s.len()
    }
    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }
    /// Number of arc-length intervals.
    pub fn intervals(&self) -> usize {
        match self.domain {
            Domain::Interval => self.s.len() - 1,
            Domain::Torus => self.s.len(),
        }
    }
    pub fn step(&self) -> f64 {
        self.length / self.intervals() as f64
    }
    pub fn s(&self) -> &[f64] {
        &self.s
    }
    /// Parameter of the source description at each sample.
    pub fn native(&self) -> &[f64] {
        &self.native
    }
    pub fn points(&self) -> &[V3] {
        &self.points
    }
    pub fn tangents(&self) -> &[V3] {
        &self.tangent
    }
    pub fn normals(&self) -> &[V3] {
        &self.normal
    }
    pub fn binormals(&self) -> &[V3] {
        &self.binormal
    }
    pub fn kappa(&self) -> &[f64] {
        &self.kappa
    }
    pub fn tau(&self) -> &[f64] {
        &self.tau
    }
    pub fn frame(&self, i: usize) -> Frame {
        Frame { point: self.points[i], e: self.tangent[i], n: self.normal[i], b: self.binormal[i] }
    }

    pub fn grid(&self) -> UniformGrid {
        UniformGrid { start: self.s[0], h: self.step(), len: self.len(), periodic: self.is_closed() }
    }

    pub fn mean_kappa(&self) -> f64 {
        self.kappa.iter().sum::<f64>() / self.len() as f64
    }

    pub fn min_kappa(&self) -> f64 {
        self.kappa.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Index of the parameter s ↦ −s partner (mod l on a torus).
    pub fn mirror_index(&self, i: usize) -> usize {
        let n = self.intervals();
        match self.domain {
            Domain::Interval => n - i,
            Domain::Torus => (n - i) % n,
        }
    }

    pub fn kappa_at(&self, s: f64) -> f64 {
        self.grid().eval(&self.kappa, s)
    }
    pub fn point_at(&self, s: f64) -> V3 {
        self.grid().eval(&self.points, s)
    }

    /// c♯(u) = c(−u): tangent and binormal flip, curvature and torsion keep
    /// their values at the new parameter.
    pub fn reversed(&self) -> Self {
        let m = self.len();
        let idx: Vec<usize> = (0..m).map(|i| self.mirror_index(i)).collect();
        let pick = |v: &[V3], sign: f64| idx.iter().map(|&j| v[j] * sign).collect::<Vec<_>>();
        Self {
            domain: self.domain,
            length: self.length,
            s: self.s.clone(),
            native: idx.iter().map(|&j| self.native[j]).collect(),
            points: pick(&self.points, 1.0),
            tangent: pick(&self.tangent, -1.0),
            normal: pick(&self.normal, 1.0),
            binormal: pick(&self.binormal, -1.0),
            kappa: idx.iter().map(|&j| self.kappa[j]).collect(),
            tau: idx.iter().map(|&j| self.tau[j]).collect(),
        }
    }

    /// c(s + b) on a closed curve. Grid-aligned shifts reindex exactly;
    /// other shifts interpolate and re-orthonormalize the frame.
    pub fn shifted(&self, b: f64) -> Result<Self> {
        if !self.is_closed() {
            return Err(GeometryError::NotClosed);
        }
        let m = self.len();
        let h = self.step();
        let b = b.rem_euclid(self.length);
        let k = b / h;
        if (k - k.round()).abs() < 1e-9 {
            let k = k.round() as usize % m;
            let pick = |v: &[V3]| (0..m).map(|i| v[(i + k) % m]).collect::<Vec<_>>();
            let picks = |v: &[f64]| (0..m).map(|i| v[(i + k) % m]).collect::<Vec<_>>();
            return Ok(Self {
                domain: self.domain,
                length: self.length,
                s: self.s.clone(),
                native: picks(&self.native),
                points: pick(&self.points),
                tangent: pick(&self.tangent),
                normal: pick(&self.normal),
                binormal: pick(&self.binormal),
                kappa: picks(&self.kappa),
                tau: picks(&self.tau),
            });
        }
        let g = self.grid();
        let open = UniformGrid { periodic: false, ..g };
        let mut out = Self::empty(self.domain, self.length, self.s.clone());
        for i in 0..m {
            let x = self.s[i] + b;
            let (e, n, bb) = orthonormalize(g.eval(&self.tangent, x), g.eval(&self.normal, x));
            out.native.push(open.eval(&self.native, x.rem_euclid(self.length)));
            out.points.push(g.eval(&self.points, x));
            out.tangent.push(e);
            out.normal.push(n);
            out.binormal.push(bb);
            out.kappa.push(g.eval(&self.kappa, x));
            out.tau.push(g.eval(&self.tau, x));
        }
        Ok(out)
    }

    /// Image under an ambient isometry; torsion changes sign under
    /// reflections.
    pub fn transformed(&self, t: &Isometry3) -> Self {
        let sign = t.sign() as f64;
        let mut out = self.clone();
        for i in 0..self.len() {
            out.points[i] = t.apply(&self.points[i]);
            out.tangent[i] = t.rotation * self.tangent[i];
            out.normal[i] = t.rotation * self.normal[i];
            out.binormal[i] = out.tangent[i].cross(&out.normal[i]);
            out.tau[i] = sign * self.tau[i];
        }
        out
    }

    /// Uniform rescaling of all lengths by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Self {
        let mut out = self.clone();
        out.length *= lambda;
        out.s.iter_mut().for_each(|x| *x *= lambda);
        out.points.iter_mut().for_each(|p| *p *= lambda);
        out.kappa.iter_mut().for_each(|k| *k /= lambda);
        out.tau.iter_mut().for_each(|t| *t /= lambda);
        out
    }

    pub fn diagnostics(&self) -> CurveDiagnostics {
        let h = self.step();
        let m = self.len();
        let pairs = if self.is_closed() { m } else { m - 1 };
        let chord_excess = (0..pairs)
            .map(|i| (self.points[(i + 1) % m] - self.points[i]).norm() - h)
            .fold(f64::NEG_INFINITY, f64::max);
        let mut frame_error: f64 = 0.0;
        for i in 0..m {
            let (e, n, b) = (self.tangent[i], self.normal[i], self.binormal[i]);
            for x in [e.norm() - 1.0, n.norm() - 1.0, b.norm() - 1.0, e.dot(&n), e.dot(&b), n.dot(&b)] {
                frame_error = frame_error.max(x.abs());
            }
            frame_error = frame_error.max((e.cross(&n) - b).norm());
        }
        let periodic_gap = if self.is_closed() {
            // extrapolate one step past the end and compare with the first sample
            let w = fornberg(m as f64, &(m - 6..m).map(|j| j as f64).collect::<Vec<_>>(), 0).swap_remove(0);
            let ext = |v: &[f64]| (0..6).map(|k| w[k] * v[m - 6 + k]).sum::<f64>();
            let mut gap: f64 = 0.0;
            for c in 0..3 {
                let xs: Vec<f64> = self.points.iter().map(|p| p[c]).collect();
                gap = gap.max((ext(&xs) - xs[0]).abs() / self.length);
                let es: Vec<f64> = self.tangent.iter().map(|p| p[c]).collect();
                gap = gap.max((ext(&es) - es[0]).abs());
            }
            gap = gap.max((ext(&self.kappa) - self.kappa[0]).abs() / self.mean_kappa());
            gap
        } else {
            0.0
        };
        CurveDiagnostics { chord_excess, min_kappa: self.min_kappa(), frame_error, periodic_gap }
    }

    /// Checks the sampling invariants against the tolerances.
    pub fn validate(&self, tol: &Tolerances) -> Result<()> {
        let d = self.diagnostics();
        if d.min_kappa <= 0.0 {
            return Err(GeometryError::NonPositiveKappa { s: 0.0, kappa: d.min_kappa });
        }
        if d.chord_excess > tol.len * self.length {
            return Err(GeometryError::InvalidInput(format!("chord exceeds arc length by {:e}", d.chord_excess)));
        }
        if d.frame_error > tol.frame {
            return Err(GeometryError::NonOrthonormalFrame { deviation: d.frame_error });
        }
        if d.periodic_gap > tol.periodic {
            return Err(GeometryError::NotPeriodic { gap: d.periodic_gap });
        }
        Ok(())
    }
}

/// Arc-length resampling of raw points through a local degree-7 Lagrange
/// interpolant in the chord-length parameter. Returns (length, points).
pub(crate) fn resample_points(points: &[V3], closed: bool, n: usize) -> Result<(f64, Vec<V3>)> {
    let m = points.len();
    if m < 3 {
        return Err(GeometryError::DegenerateCurve { length: 0.0 });
    }
    let segs = if closed { m } else { m - 1 };
    let mut knots = vec![0.0];
    for k in 0..segs {
        let d = (points[(k + 1) % m] - points[k]).norm();
        if d == 0.0 {
            return Err(GeometryError::InvalidInput(format!("repeated sample at index {}", k + 1)));
        }
        knots.push(knots[k] + d);
    }
    let total = knots[segs];
    let width = m.min(8);
    // nodes (parameter, point) of the interpolant used on segment k
    let nodes = |k: usize| -> (Vec<f64>, Vec<V3>) {
        let first = k as i64 - (width as i64 / 2 - 1);
        let first = if closed { first } else { first.clamp(0, m as i64 - width as i64) };
        (first..first + width as i64)
            .map(|j| {
                let wrap = j.div_euclid(m as i64) as f64;
                let jj = j.rem_euclid(m as i64) as usize;
                (knots[jj] + wrap * total, points[jj])
            })
            .unzip()
    };
    let eval = |k: usize, t: f64, order: usize| -> V3 {
        let (ts, ps) = nodes(k);
        let w = &fornberg(t, &ts, order)[order];
        ps.iter().zip(w).fold(V3::zeros(), |a, (p, wk)| a + p * *wk)
    };
    let speed = |k: usize, t: f64| eval(k, t, 1).norm();
    let mut cum = vec![0.0];
    for k in 0..segs {
        let mut acc = 0.0;
        let sub = 4;
        let dt = (knots[k + 1] - knots[k]) / sub as f64;
        for j in 0..sub {
            let a = knots[k] + j as f64 * dt;
            acc += gauss5(&|t| speed(k, t), a, a + dt);
        }
        cum.push(cum[k] + acc);
    }
    let length = cum[segs];
    if length < 1e-12 {
        return Err(GeometryError::DegenerateCurve { length });
    }
    let count = if closed { n } else { n + 1 };
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let target = (i as f64 * length / n as f64).min(length);
        let k = cum.partition_point(|&c| c <= target).clamp(1, segs) - 1;
        let (a, b) = (knots[k], knots[k + 1]);
        let mut t = a + (b - a) * (target - cum[k]) / (cum[k + 1] - cum[k]);
        for _ in 0..20 {
            let g = cum[k] + gauss5(&|x| speed(k, x), a, t) - target;
            let dt = g / speed(k, t);
            t = (t - dt).clamp(a, b);
            if dt.abs() < 1e-14 * (1.0 + t.abs()) {
                break;
            }
        }
        out.push(eval(k, t, 0));
    }
    Ok((length, out))
}
