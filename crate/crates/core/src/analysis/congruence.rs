use crate::config::Tolerances;
use crate::curve::symmetry::{candidate_matches, match_residual, ParameterAction};
use crate::curve::V3;
use crate::numeric::procrustes::{fit, Isometry3};
use crate::strip::DevelopableStrip;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// T ∘ a(s, v) = b(φ(s), v_sign · v) up to the registration residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Congruence {
    pub isometry: Isometry3,
    pub action: ParameterAction,
    pub v_sign: i8,
    pub residual: f64,
}

const ROWS: usize = 512;

fn correspondences(a: &DevelopableStrip, b: &DevelopableStrip) -> Vec<ParameterAction> {
    let g = a.grid();
    if !g.periodic {
        return candidate_matches(a.crease().kappa(), b.crease().kappa(), g);
    }
    let kbar = a.crease().mean_kappa();
    let mu_scale = a.max_mu().abs().max(1e-300);
    let mut cands = candidate_matches(a.crease().kappa(), b.crease().kappa(), g);
    if cands.is_empty() {
        cands = candidate_matches(a.mu(), b.mu(), g);
    }
    if cands.is_empty() {
        cands = candidate_matches(a.crease().tau(), b.crease().tau(), g);
    }
    cands
        .into_iter()
        .filter(|phi| {
            match_residual(a.crease().kappa(), b.crease().kappa(), g, *phi) < 1e-3 * kbar
                && match_residual(a.mu(), b.mu(), g, *phi) < 1e-3 * mu_scale
        })
        .collect()
}

/// Searches for an ambient isometry carrying strip `a` onto strip `b` by
/// rigid registration of matched mesh samples, under every candidate
/// correspondence of crease parameters and both ruling orientations.
pub fn find_congruence(a: &DevelopableStrip, b: &DevelopableStrip, n_v: usize, tol: &Tolerances) -> Option<Congruence> {
    let (ca, cb) = (a.crease(), b.crease());
    if ca.domain() != cb.domain() || ca.len() != cb.len() || (ca.length() - cb.length()).abs() > tol.len * ca.length() {
        return None;
    }
    let eps = a.width().min(b.width());
    let stride = (ca.len() / ROWS).max(1);
    let rows: Vec<usize> = (0..ca.len()).step_by(stride).collect();
    let vs: Vec<f64> = (0..n_v).map(|j| -eps + 2.0 * eps * j as f64 / (n_v - 1) as f64).collect();
    let source: Vec<V3> = rows.iter().flat_map(|&i| vs.iter().map(move |&v| a.point(i, v))).collect();
    let limit = tol.sym * ca.length();
    let mut best: Option<Congruence> = None;
    for phi in correspondences(a, b) {
        for v_sign in [1i8, -1] {
            let target: Vec<V3> = rows
                .iter()
                .flat_map(|&i| {
                    let s = phi.apply(ca.s()[i]);
                    vs.iter().map(move |&v| b.point_at(s, v_sign as f64 * v))
                })
                .collect();
            let f = fit(&source, &target, true);
            if f.max_residual < limit && best.is_none_or(|c| f.max_residual < c.residual) {
                best = Some(Congruence { isometry: f.isometry, action: phi, v_sign, residual: f.max_residual });
            }
        }
    }
    best
}

/// Pairwise congruence of a list of strips. Entry (i, j) of the witness list
/// is filled for i < j.
pub fn congruence_matrix(
    strips: &[&DevelopableStrip],
    n_v: usize,
    tol: &Tolerances,
) -> (Vec<Vec<bool>>, Vec<((usize, usize), Option<Congruence>)>) {
    let k = strips.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let found: Vec<((usize, usize), Option<Congruence>)> =
        pairs.par_iter().map(|&(i, j)| ((i, j), find_congruence(strips[i], strips[j], n_v, tol))).collect();
    let mut m = vec![vec![false; k]; k];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    for ((i, j), c) in &found {
        m[*i][*j] = c.is_some();
        m[*j][*i] = c.is_some();
    }
    (m, found)
}

/// Equivalence-class label (smallest member index) generated by a boolean
/// relation.
pub fn class_labels(m: &[Vec<bool>]) -> Vec<usize> {
    let k = m.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..k {
        for j in i + 1..k {
            if m[i][j] {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..k).map(|i| root(&mut parent, i)).collect()
}

pub(crate) fn count_classes(labels: &[usize]) -> usize {
    let mut l = labels.to_vec();
    l.sort_unstable();
    l.dedup();
    l.len()
}
