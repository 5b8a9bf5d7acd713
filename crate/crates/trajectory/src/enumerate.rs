use crate::trace::{trace_saddle_connection, SaddleConnection};
use crate::TrajectoryError;
use geom_core::Vec2;
use rayon::prelude::*;
use std::collections::HashSet;
use surface_model::{Corner, SideRef, TranslationSurface};

#[derive(Clone, Copy, Debug)]
pub struct EnumerationConfig {
    /// Cap on the number of unfolded polygon copies examined per corner
    /// germ before the search aborts.
    pub max_nodes: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            max_nodes: 1_000_000,
        }
    }
}

/// Angular sector spanned counterclockwise from `lo` to `hi` (width
/// below pi). An open boundary means the boundary ray itself is blocked
/// by a singularity closer to the apex.
#[derive(Clone, Copy, Debug)]
struct Wedge {
    lo: Vec2,
    hi: Vec2,
    lo_open: bool,
    hi_open: bool,
}

const EPS_DIR: f64 = 1e-12;

/// Distance from the origin to the segment `[a, b]`.
fn dist_to_segment(a: Vec2, b: Vec2) -> f64 {
    let e = b - a;
    let len2 = e.norm_sq();
    if len2 == 0.0 {
        return a.norm();
    }
    let t = ((-a).dot(e) / len2).clamp(0.0, 1.0);
    (a + e * t).norm()
}

/// Point where the ray from the origin in direction `u` meets the
/// segment `[a, b]` (clamped to the segment).
fn clip_point(a: Vec2, b: Vec2, u: Vec2) -> Vec2 {
    let e = b - a;
    let denom = u.cross(e);
    if denom.abs() < 1e-14 {
        return a;
    }
    let s = (-u.cross(a) / denom).clamp(0.0, 1.0);
    a + e * s
}

/// Enumerate every oriented saddle connection of length at most
/// `length_bound` by unfolding the surface around each corner germ and
/// collecting visible polygon vertices within the wedge of the corner.
/// The result is sorted by length, then slope.
pub fn enumerate_saddle_connections(
    s: &TranslationSurface,
    length_bound: f64,
    cfg: &EnumerationConfig,
) -> Result<Vec<SaddleConnection>, TrajectoryError> {
    let corners: Vec<Corner> = (0..s.polygons().len())
        .flat_map(|p| (0..s.polygon(p).len()).map(move |v| Corner { polygon: p, vertex: v }))
        .collect();

    let per_corner: Result<Vec<Vec<SaddleConnection>>, TrajectoryError> = corners
        .par_iter()
        .map(|&c| enumerate_from_corner(s, c, length_bound, cfg))
        .collect();
    let mut all: Vec<SaddleConnection> = per_corner?.into_iter().flatten().collect();
    all.sort_by(|a, b| {
        (a.length(), a.slope().key(), a.holonomy.x, a.holonomy.y)
            .partial_cmp(&(b.length(), b.slope().key(), b.holonomy.x, b.holonomy.y))
            .unwrap()
    });
    Ok(all)
}

fn enumerate_from_corner(
    s: &TranslationSurface,
    c: Corner,
    length_bound: f64,
    cfg: &EnumerationConfig,
) -> Result<Vec<SaddleConnection>, TrajectoryError> {
    let eps = s.tol().eps_len;
    let (lo, hi) = s.corner_wedge(c);
    // half-open germ wedge: the low boundary (outgoing side) belongs to
    // this corner, the high boundary to the counterclockwise neighbour
    let start_wedge = Wedge {
        lo,
        hi,
        lo_open: false,
        hi_open: true,
    };
    let origin = s.polygon(c.polygon).vertex(c.vertex);
    let mut stack = vec![(c.polygon, -origin, start_wedge)];
    let mut seen: HashSet<(i64, i64)> = HashSet::new();
    let mut found = Vec::new();
    let mut nodes = 0usize;

    while let Some((p, shift, w)) = stack.pop() {
        nodes += 1;
        if nodes > cfg.max_nodes {
            return Err(TrajectoryError::Budget(nodes));
        }
        let poly = s.polygon(p);
        let k = poly.len();
        let verts: Vec<Vec2> = (0..k).map(|i| poly.vertex(i) + shift).collect();

        for &v in &verts {
            let r = v.norm();
            if r < eps || r > length_bound + eps {
                continue;
            }
            let u = v / r;
            let c1 = w.lo.cross(u);
            let c2 = u.cross(w.hi);
            let inside = c1 > EPS_DIR && c2 > EPS_DIR;
            let on_lo = c1.abs() <= EPS_DIR && w.lo.dot(u) > 0.0 && !w.lo_open;
            let on_hi = c2.abs() <= EPS_DIR && w.hi.dot(u) > 0.0 && !w.hi_open;
            if !(inside || on_lo || on_hi) {
                continue;
            }
            let key = ((v.x / 1e-9).round() as i64, (v.y / 1e-9).round() as i64);
            if !seen.insert(key) {
                continue;
            }
            match trace_saddle_connection(s, c, v) {
                Ok(sc) => found.push(sc),
                // a blocked direction leaking through the angular
                // tolerance: the tracer is the arbiter
                Err(TrajectoryError::InteriorSingularity) => {}
                Err(e) => return Err(e),
            }
        }

        for i in 0..k {
            let a = verts[i];
            let b = verts[(i + 1) % k];
            // only sides facing away from the apex can be crossed outward
            if a.cross(b) <= EPS_DIR * a.norm() * b.norm() {
                continue;
            }
            let da = a.normalized();
            let db = b.normalized();
            // a wedge boundary passing through a side endpoint is
            // blocked beyond that singularity: mark it open
            let (nlo, nlo_open) = if w.lo.cross(da) > EPS_DIR {
                (da, true)
            } else if w.lo.cross(da).abs() <= EPS_DIR && w.lo.dot(da) > 0.0 {
                (w.lo, true)
            } else {
                (w.lo, w.lo_open)
            };
            let (nhi, nhi_open) = if db.cross(w.hi) > EPS_DIR {
                (db, true)
            } else if db.cross(w.hi).abs() <= EPS_DIR && w.hi.dot(db) > 0.0 {
                (w.hi, true)
            } else {
                (w.hi, w.hi_open)
            };
            if nlo.cross(nhi) <= EPS_DIR {
                continue;
            }
            // prune by distance to the part of the side that is visible
            // through the narrowed wedge
            let visible_lo = clip_point(a, b, nlo);
            let visible_hi = clip_point(a, b, nhi);
            if dist_to_segment(visible_lo, visible_hi) > length_bound + eps {
                continue;
            }
            let here = SideRef::new(p, i);
            let target = s.glued(here);
            let nshift = shift - s.shift_across(here);
            stack.push((
                target.polygon,
                nshift,
                Wedge {
                    lo: nlo,
                    hi: nhi,
                    lo_open: nlo_open,
                    hi_open: nhi_open,
                },
            ));
        }
    }
    Ok(found)
}

/// All shortest closed saddle connections (loops based at a single cone
/// point), i.e. the systoles realised by saddle connections.
pub fn systoles(
    s: &TranslationSurface,
    cfg: &EnumerationConfig,
) -> Result<Vec<SaddleConnection>, TrajectoryError> {
    let mut bound = s.min_side_length() * (1.0 + 1e-9);
    let cap = 64.0 * s.max_polygon_diameter();
    loop {
        let all = enumerate_saddle_connections(s, bound, cfg)?;
        let closed: Vec<SaddleConnection> = all.into_iter().filter(|sc| sc.is_closed()).collect();
        if let Some(min) = closed
            .iter()
            .map(|sc| sc.length())
            .min_by(|a, b| a.partial_cmp(b).unwrap())
        {
            return Ok(closed
                .into_iter()
                .filter(|sc| sc.length() <= min * (1.0 + 1e-9))
                .collect());
        }
        bound *= 2.0;
        if bound > cap {
            return Err(TrajectoryError::BadHolonomy(
                "no closed saddle connection found".into(),
            ));
        }
    }
}
