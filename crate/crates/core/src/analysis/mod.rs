//! Symmetry analysis and congruence classification.

mod classify;
mod closed;
mod congruence;
mod mean_h;
mod midpoint;
mod mu_symmetry;

pub use classify::{classify_quartet, CongruenceReport, DecisionCase};
pub use closed::{classify_closed, ClosedCensus, MemberId};
pub use congruence::{class_labels, congruence_matrix, find_congruence, Congruence};
pub use mean_h::{equal_mean_curvature_torsion, tau_at_origin_closed_form, MeanCurvatureSolution};
pub use midpoint::{midpoint_criterion, MidpointReport, MidpointVerdict};
pub use mu_symmetry::{mu_symmetry, FunctionSymmetryReport};
