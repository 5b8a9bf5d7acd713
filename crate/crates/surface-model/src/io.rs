use crate::{build_surface, SideRef, SurfaceError, TranslationSurface};
use geom_core::{Polygon, Vec2};
use serde::{Deserialize, Serialize};

/// On-disk surface description:
/// `{"polygons": [[[x,y], ...], ...], "gluings": [[[p,s],[p',s']], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub polygons: Vec<Vec<[f64; 2]>>,
    pub gluings: Vec<[[usize; 2]; 2]>,
}

pub fn surface_to_json(s: &TranslationSurface) -> SurfaceFile {
    let polygons = s
        .polygons()
        .iter()
        .map(|p| p.vertices().iter().map(|v| [v.x, v.y]).collect())
        .collect();
    let mut gluings = Vec::new();
    for pi in 0..s.polygons().len() {
        for si in 0..s.polygon(pi).len() {
            let t = s.glued(SideRef::new(pi, si));
            if (pi, si) < (t.polygon, t.side) {
                gluings.push([[pi, si], [t.polygon, t.side]]);
            }
        }
    }
    SurfaceFile { polygons, gluings }
}

pub fn surface_from_json(f: &SurfaceFile) -> Result<TranslationSurface, SurfaceError> {
    let polygons = f
        .polygons
        .iter()
        .map(|vs| Polygon::new(vs.iter().map(|&[x, y]| Vec2::new(x, y)).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    let pairs: Vec<(SideRef, SideRef)> = f
        .gluings
        .iter()
        .map(|&[[p, s], [q, t]]| (SideRef::new(p, s), SideRef::new(q, t)))
        .collect();
    build_surface(polygons, &pairs)
}
