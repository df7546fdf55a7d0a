//! Developable strips along space curves, their curved foldings and
//! isomers, and congruence classification of the resulting foldings.

pub mod analysis;
pub mod catalog;
pub mod config;
pub mod curve;
pub mod error;
pub mod export;
pub mod isomers;
pub mod numeric;
pub mod strip;

pub use config::{Settings, Tolerances};
pub use curve::{Domain, Frame, PlaneCurve, SpaceCurve};
pub use error::{GeometryError, Result};
pub use numeric::procrustes::Isometry3;
pub use strip::DevelopableStrip;
