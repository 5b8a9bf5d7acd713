//! Hyperbolic geometry of the deformation orbit of a lattice surface.
//!
//! A unimodular matrix `M` deforms a base surface into `M·S`; up to the
//! rotations, which act trivially on the flat metric, the deformed
//! surfaces are parametrized by points of the upper half-plane through
//! the map [`psi`]. Directions of saddle connections become boundary
//! points, the angle between two direction families on a deformed
//! surface is a function of the hyperbolic distance to the geodesic
//! joining their boundary points ([`theta`], [`dist_to_geodesic`]), and
//! the intersection constant of a pair of directions ([`k_dd`]) is
//! invariant along the orbit. Combining the two gives a closed form for
//! the largest intersection-to-length ratio on every surface of the
//! orbit ([`kvol_disk`]), valid once the comparison hypotheses checked
//! by [`check_big_statement_hypotheses`] hold on the pieces of the
//! fundamental domain.

mod domains;
mod halfplane;
mod kbounds;

pub use domains::{
    check_big_statement_hypotheses, fundamental_domain, geodesic_meets_interior,
    reduce_to_fundamental_domain, sinus_comparison_minimum, standard_domains, ComparisonDomain,
    FundamentalDomainData, HypothesisReport, SinusComparisonReport,
};
pub use halfplane::{
    dist_to_geodesic, mobius, psi, theta, theta_from_matrix, DiskPoint, Geodesic,
};
pub use kbounds::{
    k_closed_forms, k_dd, k_dd_with, kvol_constant, kvol_disk, sin_theta_pm, DirectionPairBound,
    KClosedForms, KMethod,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TeichError {
    #[error("matrix determinant {0} is not 1")]
    NotUnimodular(f64),
    #[error("({0}, {1}) is not in the open upper half-plane")]
    BadPoint(f64, f64),
    #[error("a geodesic needs two distinct boundary points")]
    BadGeodesic,
    #[error("the two slopes coincide")]
    EqualSlopes,
    #[error("invalid comparison domain: {0}")]
    BadDomain(String),
    #[error("no closed saddle connection of slope {0} within the length budget")]
    NonPeriodicSlope(String),
    #[error("closed form not applicable: {0}")]
    FormulaNotApplicable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Surface(#[from] surface_model::SurfaceError),
    #[error(transparent)]
    Trajectory(#[from] trajectory::TrajectoryError),
    #[error(transparent)]
    Intersection(#[from] intersection::IntersectionError),
}

/// Whether two boundary slopes name the same point of the boundary
/// circle.
pub(crate) fn slope_eq(a: trajectory::Slope, b: trajectory::Slope) -> bool {
    use trajectory::Slope::*;
    match (a, b) {
        (Infinite, Infinite) => true,
        (Finite(x), Finite(y)) => (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs())),
        _ => false,
    }
}
