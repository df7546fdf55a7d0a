use super::congruence::{class_labels, congruence_matrix, count_classes, Congruence};
use super::mu_symmetry::{mu_symmetry, FunctionSymmetryReport};
use crate::config::Settings;
use crate::curve::symmetry::{detect_curve_symmetries, CurveSymmetryReport};
use crate::error::{GeometryError, Result};
use crate::isomers::IsomerQuartet;
use crate::strip::DevelopableStrip;
use serde::{Deserialize, Serialize};

/// Branch of the congruence-count decision tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecisionCase {
    /// Neither the crease nor μ has a symmetry: N = 4.
    B1NoSymmetries,
    /// Some symmetry, none of the N = 1 conditions: N = 2.
    B2LeTwo,
    /// Planar crease with a non-trivial symmetry: N = 1.
    B3aPlanarNontrivial,
    /// Planar crease and symmetric μ: N = 1.
    B3bPlanarMuSym,
    /// Positive crease symmetry and symmetric μ: N = 1.
    B3cPositiveSymMuSym,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairEvidence {
    pub a: usize,
    pub b: usize,
    pub congruence: Option<Congruence>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongruenceReport {
    /// Right-equivalence classes predicted from the μ symmetry (4 or 2).
    pub n_right_classes: usize,
    /// Right-equivalence classes found by comparing normal forms.
    pub n_right_classes_normal_form: usize,
    /// N from the decision tree.
    pub n_congruence_classes: usize,
    pub fired_case: DecisionCase,
    pub satisfied_subcases: Vec<DecisionCase>,
    pub curve: CurveSymmetryReport,
    pub mu: FunctionSymmetryReport,
    /// Member order: F, dual, inverse, inverse dual.
    pub pairwise_matrix: Vec<Vec<bool>>,
    pub evidence: Vec<PairEvidence>,
    /// Class count of `pairwise_matrix`.
    pub registration_classes: usize,
    pub oracle_agrees: bool,
}

/// (N, fired case, satisfied N = 1 subcases) from the symmetry findings.
pub fn decide(curve: &CurveSymmetryReport, mu: &FunctionSymmetryReport) -> (usize, DecisionCase, Vec<DecisionCase>) {
    let crease_sym = curve.is_planar || curve.has_nontrivial();
    if !crease_sym && !mu.has_symmetry {
        return (4, DecisionCase::B1NoSymmetries, Vec::new());
    }
    let mut sub = Vec::new();
    if curve.is_planar && curve.has_nontrivial() {
        sub.push(DecisionCase::B3aPlanarNontrivial);
    }
    if curve.is_planar && mu.has_symmetry {
        sub.push(DecisionCase::B3bPlanarMuSym);
    }
    if curve.has_positive_symmetry && mu.has_symmetry {
        sub.push(DecisionCase::B3cPositiveSymMuSym);
    }
    match sub.first() {
        Some(&c) => (1, c, sub),
        None => (2, DecisionCase::B2LeTwo, sub),
    }
}

/// Counts right-equivalence and congruence classes of the isomers of an
/// admissible strip on an interval, by the symmetry decision tree and,
/// independently, by pairwise registration.
pub fn classify_quartet(f: &DevelopableStrip, settings: &Settings) -> Result<CongruenceReport> {
    let tol = &settings.tol;
    if f.crease().is_closed() {
        return Err(GeometryError::NotInterval);
    }
    f.require_admissible(tol)?;
    let quartet = IsomerQuartet::new(f, tol)?;
    let curve = detect_curve_symmetries(f.crease(), tol);
    let mu = mu_symmetry(f.mu(), f.grid(), tol);
    let (n, fired_case, satisfied_subcases) = decide(&curve, &mu);
    let (matrix, found) = congruence_matrix(&quartet.members(), settings.rulings, tol);
    let registration_classes = count_classes(&class_labels(&matrix));
    Ok(CongruenceReport {
        n_right_classes: if mu.has_symmetry { 2 } else { 4 },
        n_right_classes_normal_form: quartet.n_right_classes(tol),
        n_congruence_classes: n,
        fired_case,
        satisfied_subcases,
        curve,
        mu,
        pairwise_matrix: matrix,
        evidence: found.into_iter().map(|((a, b), congruence)| PairEvidence { a, b, congruence }).collect(),
        registration_classes,
        oracle_agrees: registration_classes == n,
    })
}
