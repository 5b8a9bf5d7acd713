use crate::IntersectionError;
use geom_core::Vec2;
use std::collections::HashSet;
use surface_model::{SideRef, TranslationSurface};
use trajectory::SaddleConnection;

/// Transversal crossing away from the cone points.
#[derive(Clone, Copy, Debug)]
pub struct CrossingPoint {
    pub polygon: usize,
    pub point: Vec2,
}

/// Sign shared by every transversal crossing of two straight geodesics.
pub fn nonsingular_sign(a: &SaddleConnection, b: &SaddleConnection) -> i64 {
    let c = a.holonomy.cross(b.holonomy);
    if c > 0.0 {
        1
    } else if c < 0.0 {
        -1
    } else {
        0
    }
}

enum SegHit {
    None,
    Point(Vec2),
    Overlap,
}

fn seg_intersect(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2, eps: f64) -> SegHit {
    let va = a1 - a0;
    let vb = b1 - b0;
    let la = va.norm();
    let lb = vb.norm();
    let denom = va.cross(vb);
    if denom.abs() <= 1e-12 * la * lb {
        // parallel; overlap only when collinear with a common stretch
        if va.cross(b0 - a0).abs() / la > eps {
            return SegHit::None;
        }
        let u = va / la;
        let (s0, s1) = (u.dot(b0 - a0), u.dot(b1 - a0));
        let (lo, hi) = (s0.min(s1), s0.max(s1));
        if hi.min(la) - lo.max(0.0) > eps {
            return SegHit::Overlap;
        }
        return SegHit::None;
    }
    let d = b0 - a0;
    let ta = d.cross(vb) / denom;
    let tb = d.cross(va) / denom;
    if ta * la < -eps || (ta - 1.0) * la > eps || tb * lb < -eps || (tb - 1.0) * lb > eps {
        return SegHit::None;
    }
    SegHit::Point(a0 + va * ta)
}

/// Canonical dedup key of a point of the surface given in the
/// coordinates of one polygon: points on a glued side are mapped to the
/// representation with the smaller (polygon, side) pair, so a crossing
/// lying on a side gets one key from both adjacent polygons.
fn canonical_key(s: &TranslationSurface, polygon: usize, x: Vec2, eps: f64) -> (usize, i64, i64) {
    let poly = s.polygon(polygon);
    let k = poly.len();
    let quantum = (eps * 10.0).max(1e-12);
    let q = |p: usize, v: Vec2| {
        (
            p,
            (v.x / quantum).round() as i64,
            (v.y / quantum).round() as i64,
        )
    };
    let mut best = q(polygon, x);
    for i in 0..k {
        let a = poly.vertex(i);
        let e = poly.edge(i);
        let le = e.norm();
        let off = (x - a).cross(e).abs() / le;
        let t = (x - a).dot(e) / le;
        if off < eps && (-eps..=le + eps).contains(&t) {
            let here = SideRef::new(polygon, i);
            let there = s.glued(here);
            let cand = q(there.polygon, x + s.shift_across(here));
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

fn near_vertex(s: &TranslationSurface, polygon: usize, x: Vec2, eps: f64) -> bool {
    let poly = s.polygon(polygon);
    (0..poly.len()).any(|i| (poly.vertex(i) - x).norm() < eps)
}

/// Transversal crossings of two saddle connections away from the cone
/// points, each geometric crossing counted once. Fails when the curves
/// overlap along a common stretch.
pub fn nonsingular_intersections(
    s: &TranslationSurface,
    a: &SaddleConnection,
    b: &SaddleConnection,
) -> Result<Vec<CrossingPoint>, IntersectionError> {
    let eps = s.tol().eps_len;
    let vertex_eps = eps * 10.0;
    let mut seen: HashSet<(usize, i64, i64)> = HashSet::new();
    let mut out = Vec::new();
    for sa in &a.segments {
        for sb in &b.segments {
            if sa.polygon != sb.polygon {
                continue;
            }
            match seg_intersect(
                sa.entry_point,
                sa.exit_point,
                sb.entry_point,
                sb.exit_point,
                eps,
            ) {
                SegHit::None => {}
                SegHit::Overlap => return Err(IntersectionError::TangentialOverlap),
                SegHit::Point(x) => {
                    if near_vertex(s, sa.polygon, x, vertex_eps) {
                        continue;
                    }
                    if seen.insert(canonical_key(s, sa.polygon, x, vertex_eps)) {
                        out.push(CrossingPoint {
                            polygon: sa.polygon,
                            point: x,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
