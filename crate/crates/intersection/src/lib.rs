//! Intersection numbers of saddle connections and of closed curves
//! made of saddle connections: transversal crossings in polygon
//! interiors and crossings at cone points, detected by interleaving
//! chords on the link circle of the singularity.

mod crossings;
mod singular;
mod verify;

pub use crossings::{nonsingular_intersections, nonsingular_sign, CrossingPoint};
pub use singular::{curve_chords, singular_intersection, LinkChord};
pub use verify::{verify_main_inequality, MainInequalityReport};

use serde::Serialize;
use surface_model::TranslationSurface;
use thiserror::Error;
use trajectory::SaddleConnection;

#[derive(Debug, Error)]
pub enum IntersectionError {
    #[error("curves overlap along a common segment; intersection number undefined")]
    TangentialOverlap,
    #[error("consecutive saddle connections of a curve meet different cone points")]
    ClassMismatch,
    #[error("curve is empty")]
    EmptyCurve,
    #[error(transparent)]
    Trajectory(#[from] trajectory::TrajectoryError),
}

/// Complete intersection data of two curves.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IntersectionReport {
    /// Number of transversal crossings away from the cone points.
    pub nonsingular: usize,
    /// Common sign of those crossings (0 when there are none).
    pub sign: i64,
    /// Number of crossing pairs of link chords at cone points.
    pub singular: usize,
    /// Signed sum over crossing chord pairs.
    pub singular_signed: i64,
    /// Total number of crossings.
    pub geometric: usize,
    /// Signed total.
    pub algebraic: i64,
}

/// Intersection data of two closed curves given as cyclic sequences of
/// saddle connections (a single connection is a closed curve when both
/// its endpoints lie at the same cone point).
pub fn curve_intersection(
    s: &TranslationSurface,
    g: &[SaddleConnection],
    d: &[SaddleConnection],
) -> Result<IntersectionReport, IntersectionError> {
    if g.is_empty() || d.is_empty() {
        return Err(IntersectionError::EmptyCurve);
    }
    let mut nonsingular = 0;
    let mut nonsingular_signed = 0i64;
    let mut signs_seen = [false; 2];
    for a in g {
        for b in d {
            if trajectory::same_geodesic(s, a, b) {
                continue;
            }
            let pts = nonsingular_intersections(s, a, b)?;
            if !pts.is_empty() {
                let sign = nonsingular_sign(a, b);
                nonsingular += pts.len();
                nonsingular_signed += sign * pts.len() as i64;
                signs_seen[if sign > 0 { 0 } else { 1 }] = true;
            }
        }
    }
    let sign = match signs_seen {
        [true, false] => 1,
        [false, true] => -1,
        _ => 0,
    };
    let (singular, singular_signed) = singular_intersection(s, g, d)?;
    Ok(IntersectionReport {
        nonsingular,
        sign,
        singular,
        singular_signed,
        geometric: nonsingular + singular,
        algebraic: nonsingular_signed + singular_signed,
    })
}

/// Intersection data of two saddle connections, treated as closed
/// curves when possible.
pub fn intersection_report(
    s: &TranslationSurface,
    a: &SaddleConnection,
    b: &SaddleConnection,
) -> Result<IntersectionReport, IntersectionError> {
    curve_intersection(s, std::slice::from_ref(a), std::slice::from_ref(b))
}

/// Signed intersection number of two saddle connections.
pub fn algebraic_intersection(
    s: &TranslationSurface,
    a: &SaddleConnection,
    b: &SaddleConnection,
) -> Result<i64, IntersectionError> {
    Ok(intersection_report(s, a, b)?.algebraic)
}

/// Total number of crossings of two saddle connections.
pub fn geometric_intersection(
    s: &TranslationSurface,
    a: &SaddleConnection,
    b: &SaddleConnection,
) -> Result<usize, IntersectionError> {
    Ok(intersection_report(s, a, b)?.geometric)
}
