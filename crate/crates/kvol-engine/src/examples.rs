//! Stock surfaces outside the two-parameter family.

use geom_core::Mat2;
use surface_model::{examples::three_square_l, TranslationSurface};

/// The L-shaped surface retiled by six equilateral triangles of side 1.
///
/// Obtained by shearing the three-square L with the linear map sending
/// the unit square to a rhombus with a 60° angle; each square becomes
/// two equilateral triangles. The shortest closed saddle connection
/// has length 1 and the area is `3·√3/2`.
pub fn six_triangle_l() -> TranslationSurface {
    let shear = Mat2::new(1.0, 0.5, 0.0, 3.0_f64.sqrt() / 2.0);
    three_square_l()
        .transformed(&shear)
        .expect("shearing a valid surface stays valid")
}
