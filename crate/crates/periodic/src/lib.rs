//! Directional cylinder decompositions of translation surfaces,
//! closed-form horizontal geometry of the semi-regular polygon
//! surfaces, separatrix diagrams and their duals as ribbon graphs, and
//! the planarity criterion for boundedness of the intersection
//! constant on the orbit.

mod cylinders;
mod diagrams;
mod horizontal;
mod ribbon;

pub use cylinders::{cylinder_decomposition, Cylinder, CylinderDecomposition};
pub use diagrams::{
    dual_separatrix_diagram, dual_separatrix_diagram_of, kvol_bounded_on_orbit,
    separatrix_diagram, separatrix_diagram_of, BoundednessReport,
};
pub use horizontal::{horizontal_geometry, HorizontalGeometry};
pub use ribbon::RibbonGraph;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PeriodicError {
    #[error("direction is not periodic within the trace budget")]
    NotPeriodic,
    #[error("inconsistent cylinder decomposition: {0}")]
    Inconsistent(String),
    #[error("invalid ribbon graph: {0}")]
    BadGraph(String),
    #[error(transparent)]
    Surface(#[from] surface_model::SurfaceError),
    #[error(transparent)]
    Trajectory(#[from] trajectory::TrajectoryError),
}
