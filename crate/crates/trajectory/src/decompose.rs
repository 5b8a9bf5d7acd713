use crate::trace::{Port, SaddleConnection};
use crate::TrajectoryError;
use surface_model::{validate_hypotheses, BouwMollerParams, TranslationSurface};

/// A segment between adjacent sides of its polygon (cutting off a
/// corner) or not. Segments with a vertex endpoint are never adjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    Adjacent,
    NonAdjacent,
}

/// Combinatorics of the polygonal segments of a saddle connection.
#[derive(Clone, Debug)]
pub struct PolygonalDecomposition {
    pub kinds: Vec<SegmentKind>,
    /// Number of non-adjacent segments.
    pub p: usize,
    /// Number of disjoint pairs of consecutive adjacent segments,
    /// summed over maximal adjacent runs.
    pub q: usize,
    pub is_odd: bool,
    pub is_side: bool,
    pub is_diagonal: bool,
}

impl PolygonalDecomposition {
    pub fn k(&self) -> usize {
        self.kinds.len()
    }
}

fn segment_kind(s: &TranslationSurface, seg: &crate::Segment) -> SegmentKind {
    let (e, x) = match (seg.entry, seg.exit) {
        (Port::Side { side: e, .. }, Port::Side { side: x, .. }) => (e, x),
        _ => return SegmentKind::NonAdjacent,
    };
    let k = s.polygon(seg.polygon).len();
    if (e + 1) % k == x || (x + 1) % k == e {
        SegmentKind::Adjacent
    } else {
        SegmentKind::NonAdjacent
    }
}

/// Maximum number of disjoint pairs of consecutive adjacent segments:
/// the sum of `floor(run/2)` over maximal runs of adjacent segments.
pub(crate) fn q_of(kinds: &[SegmentKind]) -> usize {
    let mut q = 0;
    let mut run = 0;
    for &k in kinds {
        if k == SegmentKind::Adjacent {
            run += 1;
        } else {
            q += run / 2;
            run = 0;
        }
    }
    q + run / 2
}

fn odd_structure(kinds: &[SegmentKind]) -> bool {
    let k = kinds.len();
    if kinds[0] != SegmentKind::NonAdjacent || kinds[k - 1] != SegmentKind::NonAdjacent {
        return false;
    }
    // non-adjacent segments isolated, maximal adjacent runs of odd length
    let mut run = 0;
    let mut prev_non_adjacent = false;
    for &kind in kinds {
        match kind {
            SegmentKind::NonAdjacent => {
                if prev_non_adjacent && kinds.len() > 1 {
                    return false;
                }
                if run > 0 && run % 2 == 0 {
                    return false;
                }
                run = 0;
                prev_non_adjacent = true;
            }
            SegmentKind::Adjacent => {
                run += 1;
                prev_non_adjacent = false;
            }
        }
    }
    run == 0
}

pub fn decompose(s: &TranslationSurface, sc: &SaddleConnection) -> PolygonalDecomposition {
    let kinds: Vec<SegmentKind> = sc.segments.iter().map(|seg| segment_kind(s, seg)).collect();
    let p = kinds
        .iter()
        .filter(|&&k| k == SegmentKind::NonAdjacent)
        .count();
    let q = q_of(&kinds);
    let is_odd = odd_structure(&kinds);
    PolygonalDecomposition {
        is_odd,
        is_side: sc.is_side,
        is_diagonal: sc.is_diagonal(),
        kinds,
        p,
        q,
    }
}

/// For each adjacent segment, the side of the segment on which the
/// cut-off corner vertex lies: `+1` for the left, `-1` for the right.
/// `None` for non-adjacent segments.
pub fn adjacent_corner_signs(s: &TranslationSurface, sc: &SaddleConnection) -> Vec<Option<i8>> {
    sc.segments
        .iter()
        .map(|seg| {
            let (e, x) = match (seg.entry, seg.exit) {
                (Port::Side { side: e, .. }, Port::Side { side: x, .. }) => (e, x),
                _ => return None,
            };
            let poly = s.polygon(seg.polygon);
            let k = poly.len();
            let shared = if (e + 1) % k == x {
                x
            } else if (x + 1) % k == e {
                e
            } else {
                return None;
            };
            let v = poly.vertex(shared);
            let c = seg.vector().cross(v - seg.entry_point);
            Some(if c > 0.0 { 1 } else { -1 })
        })
        .collect()
}

/// Lower bounds on the length of a saddle connection in terms of its
/// decomposition and the shortest side length. Valid for surfaces whose
/// polygons are convex with angles at least pi/2 and no side glued
/// within its own polygon, and for the m >= 3, n = 3 members of the
/// semi-regular family.
#[derive(Clone, Copy, Debug)]
pub struct LengthBoundReport {
    pub l0: f64,
    pub base_bound: f64,
    pub base_ok: bool,
    /// Stronger bound for odd-structured connections that are neither
    /// sides nor diagonals.
    pub odd_bound: Option<f64>,
    pub odd_ok: Option<bool>,
}

pub fn check_length_bounds(
    s: &TranslationSurface,
    params: Option<BouwMollerParams>,
    sc: &SaddleConnection,
    dec: &PolygonalDecomposition,
) -> Result<LengthBoundReport, TrajectoryError> {
    let report = validate_hypotheses(s);
    let standard = report.satisfies_p1 && report.satisfies_p2;
    let triangle_family = params.map_or(false, |p| p.n == 3 && p.m >= 3);
    if !standard && !triangle_family {
        return Err(TrajectoryError::HypothesesNotSatisfied);
    }
    let eps = s.tol().eps_len;
    let l0 = s.min_side_length();
    let len = sc.length();
    let base_bound = (dec.p + dec.q) as f64 * l0;
    let base_ok = len >= base_bound - eps;
    let (odd_bound, odd_ok) = if dec.is_odd && !dec.is_side && !dec.is_diagonal {
        let b = (dec.p + dec.q) as f64 * l0 + (2.0_f64.sqrt() - 1.0) * l0;
        (Some(b), Some(len >= b - eps))
    } else {
        (None, None)
    };
    Ok(LengthBoundReport {
        l0,
        base_bound,
        base_ok,
        odd_bound,
        odd_ok,
    })
}
