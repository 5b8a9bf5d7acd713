//! Small ready-made surfaces used in tests and documentation.

use crate::{build_surface, SideRef, TranslationSurface};
use geom_core::{Polygon, Vec2};

/// Unit square with opposite sides glued.
pub fn square_torus() -> TranslationSurface {
    let sq = unit_square_at(0.0, 0.0);
    build_surface(
        vec![sq],
        &[
            (SideRef::new(0, 0), SideRef::new(0, 2)),
            (SideRef::new(0, 1), SideRef::new(0, 3)),
        ],
    )
    .unwrap()
}

fn unit_square_at(x: f64, y: f64) -> Polygon {
    Polygon::new(vec![
        Vec2::new(x, y),
        Vec2::new(x + 1.0, y),
        Vec2::new(x + 1.0, y + 1.0),
        Vec2::new(x, y + 1.0),
    ])
    .unwrap()
}

/// L-shaped genus-2 surface of three unit squares: a bottom row of two
/// squares and one square on top of the left one. Sides of each square:
/// 0=bottom, 1=right, 2=top, 3=left.
pub fn three_square_l() -> TranslationSurface {
    let s1 = unit_square_at(0.0, 0.0);
    let s2 = unit_square_at(1.0, 0.0);
    let s3 = unit_square_at(0.0, 1.0);
    build_surface(
        vec![s1, s2, s3],
        &[
            (SideRef::new(0, 3), SideRef::new(1, 1)),
            (SideRef::new(0, 1), SideRef::new(1, 3)),
            (SideRef::new(2, 3), SideRef::new(2, 1)),
            (SideRef::new(0, 0), SideRef::new(2, 2)),
            (SideRef::new(0, 2), SideRef::new(2, 0)),
            (SideRef::new(1, 0), SideRef::new(1, 2)),
        ],
    )
    .unwrap()
}
