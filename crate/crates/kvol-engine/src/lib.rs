//! Brute-force evaluation of the intersection-to-length supremum.
//!
//! The supremum behind the volume-normalized intersection constant is
//! taken over pairs of closed curves, but on the surfaces treated here
//! it is realized by pairs of closed saddle connections, and the
//! maximizing pairs are short. Truncating the enumeration at a length
//! budget therefore turns the supremum into a finite maximum that can
//! be checked exhaustively: the result is always a certified lower
//! bound, and the closed forms of the companion crates certify when it
//! is the true value.

mod brute;
mod certify;
pub mod examples;

pub use brute::{default_truncation, kvol_bruteforce, sysvol, KvolResult, MaximizingPair};
pub use certify::{certify_main_inequality, MainCertificate, MaximizerKind};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Surface(#[from] surface_model::SurfaceError),
    #[error(transparent)]
    Trajectory(#[from] trajectory::TrajectoryError),
    #[error(transparent)]
    Intersection(#[from] intersection::IntersectionError),
}
