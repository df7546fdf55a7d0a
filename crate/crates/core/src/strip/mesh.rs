use super::DevelopableStrip;
use crate::config::Tolerances;
use crate::curve::V3;
use crate::error::{GeometryError, Result};
use crate::numeric::procrustes::Isometry3;
use rayon::prelude::*;
use std::collections::HashMap;
use std::f64::consts::TAU;

/// Triangulated grid over J × [v0, v1]; vertex (i, j) sits at index
/// i·cols + j.
#[derive(Debug, Clone, PartialEq)]
pub struct StripMesh {
    pub rows: usize,
    pub cols: usize,
    pub closed: bool,
    pub vertices: Vec<V3>,
    /// (s, v) of each vertex.
    pub coords: Vec<(f64, f64)>,
    pub faces: Vec<[usize; 3]>,
    pub normals: Vec<V3>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshQuality {
    /// Largest |2π − angle sum| over interior vertices, radians.
    pub max_angle_defect: f64,
    /// Largest |defect| / (one third of the incident area).
    pub max_gaussian_curvature: f64,
    pub min_face_area: f64,
}

/// Mesh over the full band [−ε, ε] with `n_v` ruling samples.
pub fn sample_mesh(strip: &DevelopableStrip, n_v: usize) -> Result<StripMesh> {
    sample_band(strip, -strip.width(), strip.width(), n_v)
}

/// Mesh over J × [v0, v1]. Fails when adjacent rulings cross inside the band.
pub fn sample_band(strip: &DevelopableStrip, v0: f64, v1: f64, n_v: usize) -> Result<StripMesh> {
    assert!(n_v >= 2 && v1 > v0);
    check_rulings(strip, v0, v1)?;
    let crease = strip.crease();
    let rows = crease.len();
    let cols = n_v;
    let vs: Vec<f64> = (0..cols).map(|j| v0 + (v1 - v0) * j as f64 / (cols - 1) as f64).collect();
    let (vertices, coords): (Vec<V3>, Vec<(f64, f64)>) = (0..rows)
        .into_par_iter()
        .flat_map_iter(|i| {
            let s = crease.s()[i];
            vs.iter().map(move |&v| (strip.point(i, v), (s, v))).collect::<Vec<_>>()
        })
        .unzip();
    let strips = if crease.is_closed() { rows } else { rows - 1 };
    let mut faces = Vec::with_capacity(2 * strips * (cols - 1));
    for i in 0..strips {
        let i1 = (i + 1) % rows;
        for j in 0..cols - 1 {
            let a = i * cols + j;
            let b = i1 * cols + j;
            let c = i1 * cols + j + 1;
            let d = i * cols + j + 1;
            faces.push([a, b, c]);
            faces.push([a, c, d]);
        }
    }
    let normals = face_normals(&vertices, &faces);
    Ok(StripMesh { rows, cols, closed: crease.is_closed(), vertices, coords, faces, normals })
}

fn face_normals(vertices: &[V3], faces: &[[usize; 3]]) -> Vec<V3> {
    faces
        .iter()
        .map(|f| (vertices[f[1]] - vertices[f[0]]).cross(&(vertices[f[2]] - vertices[f[0]])).normalize())
        .collect()
}

fn check_rulings(strip: &DevelopableStrip, v0: f64, v1: f64) -> Result<()> {
    let c = strip.crease();
    let m = c.len();
    let pairs = if c.is_closed() { m } else { m - 1 };
    for i in 0..pairs {
        let j = (i + 1) % m;
        let (p, q) = (c.points()[i], c.points()[j]);
        let (x, y) = (strip.ruling()[i], strip.ruling()[j]);
        let r = p - q;
        let b = x.dot(&y);
        let denom = 1.0 - b * b;
        if denom < 1e-14 {
            continue;
        }
        let (d, e) = (x.dot(&r), y.dot(&r));
        let v = (b * e - d) / denom;
        let w = (e - b * d) / denom;
        let gap = (p + x * v - q - y * w).norm();
        let inside = |t: f64| t >= v0 && t <= v1;
        if inside(v) && inside(w) && gap < 0.5 * r.norm() {
            return Err(GeometryError::SelfIntersectingMesh { s_a: c.s()[i], s_b: c.s()[j] });
        }
    }
    Ok(())
}

fn angle(a: V3, b: V3) -> f64 {
    a.cross(&b).norm().atan2(a.dot(&b))
}

impl StripMesh {
    fn is_interior(&self, vertex: usize) -> bool {
        let (i, j) = (vertex / self.cols, vertex % self.cols);
        let row_ok = self.closed || (i > 0 && i + 1 < self.rows);
        row_ok && j > 0 && j + 1 < self.cols
    }

    pub fn face_area(&self, f: &[usize; 3]) -> f64 {
        let v = &self.vertices;
        0.5 * (v[f[1]] - v[f[0]]).cross(&(v[f[2]] - v[f[0]])).norm()
    }

    /// Angle defect and discrete Gaussian curvature.
    pub fn quality(&self) -> MeshQuality {
        let nv = self.vertices.len();
        let mut angles = vec![0.0; nv];
        let mut areas = vec![0.0; nv];
        let mut min_face_area = f64::INFINITY;
        for f in &self.faces {
            let area = self.face_area(f);
            min_face_area = min_face_area.min(area);
            for k in 0..3 {
                let (o, p, q) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
                let v = &self.vertices;
                angles[o] += angle(v[p] - v[o], v[q] - v[o]);
                areas[o] += area / 3.0;
            }
        }
        let mut max_angle_defect: f64 = 0.0;
        let mut max_gaussian_curvature: f64 = 0.0;
        for k in (0..nv).filter(|&k| self.is_interior(k)) {
            let defect = (TAU - angles[k]).abs();
            max_angle_defect = max_angle_defect.max(defect);
            max_gaussian_curvature = max_gaussian_curvature.max(defect / areas[k]);
        }
        MeshQuality { max_angle_defect, max_gaussian_curvature, min_face_area }
    }

    /// Image under a rigid motion. Normals are recomputed from the face
    /// winding, so a reflection flips them.
    pub fn transformed(&self, t: &Isometry3) -> StripMesh {
        let mut out = self.clone();
        out.vertices = self.vertices.iter().map(|p| t.apply(p)).collect();
        out.normals = face_normals(&out.vertices, &out.faces);
        out
    }

    /// Both meshes as one triangle soup (grid metadata of `self` is kept, so
    /// `quality` is only meaningful on the parts).
    pub fn merged(&self, other: &StripMesh) -> StripMesh {
        let mut out = self.clone();
        let offset = self.vertices.len();
        out.vertices.extend_from_slice(&other.vertices);
        out.coords.extend_from_slice(&other.coords);
        out.faces.extend(other.faces.iter().map(|f| [f[0] + offset, f[1] + offset, f[2] + offset]));
        out.normals.extend_from_slice(&other.normals);
        out
    }

    /// Largest edge length, used to size spatial hash cells.
    fn max_edge(&self) -> f64 {
        self.faces
            .iter()
            .flat_map(|f| (0..3).map(move |k| (f[k], f[(k + 1) % 3])))
            .map(|(a, b)| (self.vertices[a] - self.vertices[b]).norm())
            .fold(0.0, f64::max)
    }

    /// Unique undirected edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| (0..3).map(move |k| (f[k].min(f[(k + 1) % 3]), f[k].max(f[(k + 1) % 3]))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

type Cell = (i64, i64, i64);

/// Uniform-grid bucket index over triangles.
struct TriangleIndex<'a> {
    mesh: &'a StripMesh,
    cell: f64,
    buckets: HashMap<Cell, Vec<u32>>,
}

impl<'a> TriangleIndex<'a> {
    fn new(mesh: &'a StripMesh, cell: f64) -> Self {
        let mut buckets: HashMap<Cell, Vec<u32>> = HashMap::new();
        for (k, f) in mesh.faces.iter().enumerate() {
            let (lo, hi) = bounds(f.iter().map(|&i| mesh.vertices[i]));
            for key in cells(lo, hi, cell) {
                buckets.entry(key).or_default().push(k as u32);
            }
        }
        Self { mesh, cell, buckets }
    }

    fn key(&self, p: &V3) -> Cell {
        ((p.x / self.cell).floor() as i64, (p.y / self.cell).floor() as i64, (p.z / self.cell).floor() as i64)
    }

    fn triangle(&self, k: u32) -> [V3; 3] {
        let f = self.mesh.faces[k as usize];
        [self.mesh.vertices[f[0]], self.mesh.vertices[f[1]], self.mesh.vertices[f[2]]]
    }

    /// Whether some triangle lies within `r` (at most one cell) of `p`.
    fn within(&self, p: &V3, r: f64) -> bool {
        let (cx, cy, cz) = self.key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(list) = self.buckets.get(&(cx + dx, cy + dy, cz + dz)) {
                        if list.iter().any(|&k| point_triangle_distance(p, &self.triangle(k)) < r) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Distance from `p` to the nearest triangle.
    fn distance(&self, p: &V3) -> f64 {
        let (cx, cy, cz) = self.key(p);
        let mut best = f64::INFINITY;
        let mut r: i64 = 1;
        loop {
            for dx in -r..=r {
                for dy in -r..=r {
                    for dz in -r..=r {
                        if r > 1 && dx.abs().max(dy.abs()).max(dz.abs()) < r {
                            continue;
                        }
                        if let Some(list) = self.buckets.get(&(cx + dx, cy + dy, cz + dz)) {
                            for &k in list {
                                best = best.min(point_triangle_distance(p, &self.triangle(k)));
                            }
                        }
                    }
                }
            }
            // every triangle within r cells of p has been seen
            if best <= r as f64 * self.cell || r > 64 {
                break;
            }
            r += 1;
        }
        if best.is_finite() {
            best
        } else {
            (0..self.mesh.faces.len() as u32).map(|k| point_triangle_distance(p, &self.triangle(k))).fold(f64::INFINITY, f64::min)
        }
    }
}

fn bounds(points: impl Iterator<Item = V3>) -> (V3, V3) {
    let mut lo = V3::repeat(f64::INFINITY);
    let mut hi = V3::repeat(f64::NEG_INFINITY);
    for p in points {
        lo = lo.inf(&p);
        hi = hi.sup(&p);
    }
    (lo, hi)
}

fn cells(lo: V3, hi: V3, cell: f64) -> impl Iterator<Item = Cell> {
    let a = lo.map(|x| (x / cell).floor() as i64);
    let b = hi.map(|x| (x / cell).floor() as i64);
    (a.x..=b.x).flat_map(move |x| (a.y..=b.y).flat_map(move |y| (a.z..=b.z).map(move |z| (x, y, z))))
}

/// Closest-point distance from `p` to a triangle.
pub fn point_triangle_distance(p: &V3, t: &[V3; 3]) -> f64 {
    let (a, b, c) = (t[0], t[1], t[2]);
    let ab = b - a;
    let ac = c - a;
    let ap = p - a;
    let d1 = ab.dot(&ap);
    let d2 = ac.dot(&ap);
    if d1 <= 0.0 && d2 <= 0.0 {
        return ap.norm();
    }
    let bp = p - b;
    let d3 = ab.dot(&bp);
    let d4 = ac.dot(&bp);
    if d3 >= 0.0 && d4 <= d3 {
        return bp.norm();
    }
    let vc = d1 * d4 - d3 * d2;
    if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
        let v = d1 / (d1 - d3);
        return (p - (a + ab * v)).norm();
    }
    let cp = p - c;
    let d5 = ab.dot(&cp);
    let d6 = ac.dot(&cp);
    if d6 >= 0.0 && d5 <= d6 {
        return cp.norm();
    }
    let vb = d5 * d2 - d1 * d6;
    if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
        let w = d2 / (d2 - d6);
        return (p - (a + ac * w)).norm();
    }
    let va = d3 * d6 - d5 * d4;
    if va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 {
        let w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return (p - (b + (c - b) * w)).norm();
    }
    let denom = 1.0 / (va + vb + vc);
    let v = vb * denom;
    let w = vc * denom;
    (p - (a + ab * v + ac * w)).norm()
}

/// Segment-triangle intersection point, if any.
fn segment_triangle(p0: &V3, p1: &V3, t: &[V3; 3]) -> Option<V3> {
    let dir = p1 - p0;
    let e1 = t[1] - t[0];
    let e2 = t[2] - t[0];
    let h = dir.cross(&e2);
    let det = e1.dot(&h);
    let scale = dir.norm() * e1.norm() * e2.norm();
    if det.abs() <= 1e-12 * scale {
        return None;
    }
    let f = 1.0 / det;
    let s = p0 - t[0];
    let u = f * s.dot(&h);
    if !(0.0..=1.0).contains(&u) {
        return None;
    }
    let q = s.cross(&e1);
    let v = f * dir.dot(&q);
    if v < 0.0 || u + v > 1.0 {
        return None;
    }
    let r = f * e2.dot(&q);
    (0.0..=1.0).contains(&r).then(|| p0 + dir * r)
}

fn segment_distance(p: &V3, a: &V3, b: &V3) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Distance from `p` to a polyline, searched through a bucket index.
struct PolylineIndex<'a> {
    points: &'a [V3],
    cell: f64,
    buckets: HashMap<Cell, Vec<u32>>,
}

impl<'a> PolylineIndex<'a> {
    fn new(points: &'a [V3], closed: bool, cell: f64) -> Self {
        let mut buckets: HashMap<Cell, Vec<u32>> = HashMap::new();
        let segs = if closed { points.len() } else { points.len() - 1 };
        for k in 0..segs {
            let (lo, hi) = bounds([points[k], points[(k + 1) % points.len()]].into_iter());
            for key in cells(lo, hi, cell) {
                buckets.entry(key).or_default().push(k as u32);
            }
        }
        Self { points, cell, buckets }
    }

    /// Distance if it is below one cell, otherwise infinity.
    fn near_distance(&self, p: &V3) -> f64 {
        let k = p.map(|x| (x / self.cell).floor() as i64);
        let mut best = f64::INFINITY;
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(list) = self.buckets.get(&(k.x + dx, k.y + dy, k.z + dz)) {
                        for &s in list {
                            let s = s as usize;
                            let q = (s + 1) % self.points.len();
                            best = best.min(segment_distance(p, &self.points[s], &self.points[q]));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Outcome of the pairwise intersection test.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionReport {
    pub only_along_crease: bool,
    /// The two strips cover the same point set.
    pub identical: bool,
    /// (intersection point, nearest crease sample) of an offending hit.
    pub witness: Option<(V3, V3)>,
}

/// Directed distance max_{p ∈ points} d(p, mesh), skipping points inside the
/// crease tube.
pub fn directed_distance(points: &[V3], mesh: &StripMesh, crease: &[V3], closed: bool, tube: f64) -> f64 {
    let cell = mesh.max_edge().max(1e-12);
    let index = TriangleIndex::new(mesh, cell);
    let tube_index = PolylineIndex::new(crease, closed, cell);
    points
        .par_iter()
        .filter(|p| tube_index.near_distance(p) > tube)
        .map(|p| index.distance(p))
        .reduce(|| 0.0, f64::max)
}

/// Symmetric Hausdorff distance between two meshes, excluding the crease
/// tube of radius `tube`.
pub fn hausdorff(a: &StripMesh, b: &StripMesh, crease: &[V3], closed: bool, tube: f64) -> f64 {
    directed_distance(&a.vertices, b, crease, closed, tube).max(directed_distance(&b.vertices, a, crease, closed, tube))
}

/// Tests whether two strips over the same crease image meet only within
/// `tol.sym · l` of the crease, at half-width `eps`.
pub fn strips_intersect_only_along_crease(
    a: &DevelopableStrip,
    b: &DevelopableStrip,
    eps: f64,
    n_v: usize,
    tol: &Tolerances,
) -> Result<IntersectionReport> {
    let ma = sample_band(a, -eps, eps, n_v)?;
    let mb = sample_band(b, -eps, eps, n_v)?;
    Ok(meshes_meet_only_along(&ma, &mb, a.crease().points(), a.crease().is_closed(), tol.sym * a.crease().length()))
}

/// Mesh-level version of the crease intersection test.
pub fn meshes_meet_only_along(ma: &StripMesh, mb: &StripMesh, crease: &[V3], closed: bool, tube: f64) -> IntersectionReport {
    let cell = ma.max_edge().max(mb.max_edge()).max(tube).max(1e-12);
    let tube_index = PolylineIndex::new(crease, closed, cell);
    let covers = |from: &StripMesh, to: &StripMesh| {
        let index = TriangleIndex::new(to, cell);
        from.vertices.par_iter().all(|p| tube_index.near_distance(p) <= tube || index.within(p, tube))
    };
    if covers(ma, mb) && covers(mb, ma) {
        return IntersectionReport { only_along_crease: false, identical: true, witness: None };
    }
    let crease_witness = |p: V3| {
        let nearest = crease.iter().min_by(|x, y| (*x - p).norm().total_cmp(&(*y - p).norm())).copied().unwrap();
        (p, nearest)
    };
    for (edges_of, tris_of) in [(ma, mb), (mb, ma)] {
        let index = TriangleIndex::new(tris_of, cell);
        let edges = edges_of.edges();
        let hit = edges.par_iter().find_map_first(|&(i, j)| {
            let (p0, p1) = (edges_of.vertices[i], edges_of.vertices[j]);
            let (lo, hi) = bounds([p0, p1].into_iter());
            for key in cells(lo, hi, cell) {
                if let Some(list) = index.buckets.get(&key) {
                    for &k in list {
                        if let Some(x) = segment_triangle(&p0, &p1, &index.triangle(k)) {
                            if tube_index.near_distance(&x) > tube {
                                return Some(x);
                            }
                        }
                    }
                }
            }
            None
        });
        if let Some(x) = hit {
            return IntersectionReport { only_along_crease: false, identical: false, witness: Some(crease_witness(x)) };
        }
    }
    IntersectionReport { only_along_crease: true, identical: false, witness: None }
}
