use super::congruence::{class_labels, congruence_matrix, count_classes};
use super::mu_symmetry::{mu_symmetry, FunctionSymmetryReport};
use crate::config::Settings;
use crate::curve::symmetry::{detect_curve_symmetries, CurveSymmetryReport};
use crate::error::{GeometryError, Result};
use crate::isomers::closed_family;
use crate::strip::{sample_mesh, DevelopableStrip};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MemberId {
    pub index: u8,
    /// Grid position k of the shift b = k·l/grid_b.
    pub step: usize,
    pub shift: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedCensus {
    pub grid_b: usize,
    pub members: Vec<MemberId>,
    pub matrix: Vec<Vec<bool>>,
    /// Registration residual of each congruent pair (i < j).
    pub residuals: Vec<(usize, usize, f64)>,
    pub labels: Vec<usize>,
    pub n_classes: usize,
    pub max_class_size: usize,
    /// (crease symmetries + 1)·(μ symmetries + 1)·4.
    pub class_size_bound: usize,
    /// Class sizes within the bound; `None` when μ is constant.
    pub finite_check: Option<bool>,
    /// All members pairwise non-congruent; only decided when neither the
    /// crease nor μ has a symmetry.
    pub all_distinct_check: Option<bool>,
    pub curve: CurveSymmetryReport,
    pub mu: FunctionSymmetryReport,
    /// Band half-width used for the members.
    pub width: f64,
}

/// Builds all 4·grid_b members F_b^i on the b-grid and classifies them by
/// pairwise registration.
pub fn classify_closed(f: &DevelopableStrip, grid_b: usize, settings: &Settings) -> Result<ClosedCensus> {
    let tol = &settings.tol;
    if !f.crease().is_closed() {
        return Err(GeometryError::NotClosed);
    }
    if grid_b == 0 {
        return Err(GeometryError::InvalidInput("grid_b must be positive".into()));
    }
    let curve = detect_curve_symmetries(f.crease(), tol);
    if curve.is_circle {
        return Err(GeometryError::CircleCrease);
    }
    f.require_admissible(tol)?;
    let mu = mu_symmetry(f.mu(), f.grid(), tol);
    let l = f.crease().length();
    let ids: Vec<MemberId> = (1..=4u8)
        .flat_map(|index| (0..grid_b).map(move |step| MemberId { index, step, shift: step as f64 * l / grid_b as f64 }))
        .collect();
    let mut width = f.width();
    let members = loop {
        let built: Result<Vec<DevelopableStrip>> = ids
            .par_iter()
            .map(|id| {
                let m = closed_family(f, id.index, id.shift, tol)?.strip.with_width(width);
                sample_mesh(&m, settings.rulings)?;
                Ok(m)
            })
            .collect();
        match built {
            Ok(m) => break m,
            Err(GeometryError::SelfIntersectingMesh { .. }) if width > 1e-3 * l => width *= 0.5,
            Err(e) => return Err(e),
        }
    };
    let refs: Vec<&DevelopableStrip> = members.iter().collect();
    let (matrix, found) = congruence_matrix(&refs, settings.rulings, tol);
    let labels = class_labels(&matrix);
    let n_classes = count_classes(&labels);
    let max_class_size = (0..labels.len()).map(|r| labels.iter().filter(|&&x| x == r).count()).max().unwrap_or(0);
    let class_size_bound = (curve.symmetries.len() + 1) * (mu.actions.len() + 1) * 4;
    let finite_check = (!mu.infinite).then_some(max_class_size <= class_size_bound);
    let asymmetric = !curve.is_planar && curve.symmetries.is_empty() && !mu.has_symmetry;
    let all_distinct_check = asymmetric.then_some(n_classes == members.len());
    let residuals = found.iter().filter_map(|((i, j), c)| c.map(|c| (*i, *j, c.residual))).collect();
    Ok(ClosedCensus {
        grid_b,
        members: ids,
        matrix,
        residuals,
        labels,
        n_classes,
        max_class_size,
        class_size_bound,
        finite_check,
        all_distinct_check,
        curve,
        mu,
        width,
    })
}
