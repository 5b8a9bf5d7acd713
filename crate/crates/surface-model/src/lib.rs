//! Translation surfaces as collections of convex polygons glued along
//! parallel, equal-length sides by translations, together with the
//! derived singularity structure (vertex classes, cone angles, genus)
//! and the semi-regular polygon family constructor.

mod bouw_moller;
pub mod examples;
mod io;
mod surface;

pub use bouw_moller::{build_bouw_moller, BouwMollerParams};
pub use io::{surface_from_json, surface_to_json, SurfaceFile};
pub use surface::{
    build_surface, validate_hypotheses, Corner, LinkCircle, SideRef, TranslationSurface,
    ValidationReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("side ({0},{1}) appears in {2} gluing pairs, expected exactly one")]
    IncompleteGluing(usize, usize, usize),
    #[error("side glued to itself: ({0},{1})")]
    SelfGluedSide(usize, usize),
    #[error("glued sides ({0},{1}) and ({2},{3}) are not parallel with equal length")]
    MismatchedSides(usize, usize, usize, usize),
    #[error("glued sides ({0},{1}) and ({2},{3}) have equal orientation (normals both outward)")]
    OrientationError(usize, usize, usize, usize),
    #[error("cone angle {0} is not a multiple of 2*pi within tolerance")]
    ConeAngleError(f64),
    #[error("side index out of range: ({0},{1})")]
    SideOutOfRange(usize, usize),
    #[error("invalid parameters: m={0}, n={1} (need m,n >= 2 and m*n >= 6)")]
    BadParameters(u32, u32),
    #[error("geometry error: {0}")]
    Geom(#[from] geom_core::GeomError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
