//! Planar geometry primitives shared by every other crate:
//! vectors, 2x2 matrices, convex polygons and tolerance-controlled
//! comparisons. All coincidence predicates are relative to a local
//! length scale (see [`Tolerance`]); no exact arithmetic is used.

mod polygon;
mod types;

pub use polygon::{interior_angles, semi_regular_polygon, Polygon};
pub use types::{Mat2, Tolerance, Vec2};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("degenerate polygon: both side lengths are zero")]
    DegeneratePolygon,
    #[error("parallel directions: |u x v| below tolerance")]
    ParallelDirections,
    #[error("polygon must have at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not counterclockwise (signed area {0})")]
    NotCounterclockwise(f64),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(f64),
}

/// Unoriented angle between the *lines* spanned by `u` and `v`,
/// folded into (0, pi/2]. Errors when the directions are parallel.
pub fn angle_between(u: Vec2, v: Vec2, tol: &Tolerance) -> Result<f64, GeomError> {
    let cross = u.cross(v).abs();
    if cross < tol.eps_rel * u.norm() * v.norm() {
        return Err(GeomError::ParallelDirections);
    }
    Ok(cross.atan2(u.dot(v).abs()))
}
