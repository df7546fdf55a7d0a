use thiserror::Error;

/// Failures raised by curve, strip and classification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("DegenerateCurve: total length {length:e} is below tolerance")]
    DegenerateCurve { length: f64 },
    #[error("VanishingCurvature: curvature {kappa:e} at s = {s}")]
    VanishingCurvature { s: f64, kappa: f64 },
    #[error("NonOrthonormalFrame: initial frame deviates from orthonormal by {deviation:e}")]
    NonOrthonormalFrame { deviation: f64 },
    #[error("NonPositiveKappa: curvature {kappa:e} at s = {s}")]
    NonPositiveKappa { s: f64, kappa: f64 },
    #[error("IntegrationFailure: {0}")]
    IntegrationFailure(String),
    #[error("NotPeriodic: closed curve fails to close, gap {gap:e}")]
    NotPeriodic { gap: f64 },
    #[error("AlphaOutOfRange: alpha = {alpha} at s = {s}")]
    AlphaOutOfRange { s: f64, alpha: f64 },
    #[error("SelfIntersectingMesh: rulings at s = {s_a} and s = {s_b} cross inside the band")]
    SelfIntersectingMesh { s_a: f64, s_b: f64 },
    #[error("IncompatibleCurve: target curvature {kappa} does not exceed |mu| = {mu} at s = {s}")]
    IncompatibleCurve { s: f64, kappa: f64, mu: f64 },
    #[error("UnsupportedSignChange: first angular function changes sign")]
    UnsupportedSignChange,
    #[error("NotAdmissible: max mu {max_mu} is not below min kappa {min_kappa}")]
    NotAdmissible { max_mu: f64, min_kappa: f64 },
    #[error("TorusDomain: operation requires an interval domain")]
    TorusDomain,
    #[error("NotClosed: operation requires a closed crease")]
    NotClosed,
    #[error("NotInterval: operation requires an interval domain")]
    NotInterval,
    #[error("PlanarCurve: crease lies in a plane")]
    PlanarCurve,
    #[error("PreconditionFailed: {0}")]
    PreconditionFailed(String),
    #[error("NegativeDiscriminant: discriminant {value:e} at s = {s}")]
    NegativeDiscriminant { s: f64, value: f64 },
    #[error("CircleCrease: crease is a circle, congruence classes are not finite")]
    CircleCrease,
    #[error("GridMismatch: {0}")]
    GridMismatch(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

impl GeometryError {
    /// Variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        use GeometryError::*;
        match self {
            DegenerateCurve { .. } => "DegenerateCurve",
            VanishingCurvature { .. } => "VanishingCurvature",
            NonOrthonormalFrame { .. } => "NonOrthonormalFrame",
            NonPositiveKappa { .. } => "NonPositiveKappa",
            IntegrationFailure(_) => "IntegrationFailure",
            NotPeriodic { .. } => "NotPeriodic",
            AlphaOutOfRange { .. } => "AlphaOutOfRange",
            SelfIntersectingMesh { .. } => "SelfIntersectingMesh",
            IncompatibleCurve { .. } => "IncompatibleCurve",
            UnsupportedSignChange => "UnsupportedSignChange",
            NotAdmissible { .. } => "NotAdmissible",
            TorusDomain => "TorusDomain",
            NotClosed => "NotClosed",
            NotInterval => "NotInterval",
            PlanarCurve => "PlanarCurve",
            PreconditionFailed(_) => "PreconditionFailed",
            NegativeDiscriminant { .. } => "NegativeDiscriminant",
            CircleCrease => "CircleCrease",
            GridMismatch(_) => "GridMismatch",
            InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, GeometryError>;
