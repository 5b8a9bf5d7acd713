//! Straight-line trajectories on translation surfaces: tracing a
//! geodesic through the polygons, enumerating saddle connections up to
//! a length bound by unfolding, and decomposing a saddle connection
//! into polygonal segments with the associated length bounds.

mod decompose;
mod enumerate;
mod trace;

pub use decompose::{
    adjacent_corner_signs, check_length_bounds, decompose, LengthBoundReport,
    PolygonalDecomposition, SegmentKind,
};
pub use enumerate::{enumerate_saddle_connections, systoles, EnumerationConfig};
pub use trace::{
    is_reverse, same_geodesic, trace_from_point, trace_ray_from_corner, trace_saddle_connection,
    Chord, FlowOutcome, Port, RayOutcome, SaddleConnection, Segment, Slope,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TrajectoryError {
    #[error("trajectory passes through a singularity before its endpoint")]
    InteriorSingularity,
    #[error("holonomy does not connect singularities: {0}")]
    BadHolonomy(String),
    #[error("direction points outside the corner wedge")]
    OutsideWedge,
    #[error("search budget exhausted ({0} nodes)")]
    Budget(usize),
    #[error("length bounds require convex obtuse polygons without self-gluing")]
    HypothesesNotSatisfied,
    #[error(transparent)]
    Surface(#[from] surface_model::SurfaceError),
}
