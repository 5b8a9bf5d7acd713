use crate::PeriodicError;
use geom_core::{Mat2, Polygon, Vec2};
use serde::Serialize;
use surface_model::{Corner, SideRef, TranslationSurface};
use trajectory::{trace_from_point, trace_ray_from_corner, trace_saddle_connection};
use trajectory::{FlowOutcome, RayOutcome, SaddleConnection, Slope};

/// Maximal flat cylinder of a periodic direction. Boundary lists hold
/// indices into the decomposition's saddle connections; the top is
/// recorded left to right and the bottom right to left, as seen in the
/// rotated (horizontal) picture.
#[derive(Clone, Debug, Serialize)]
pub struct Cylinder {
    pub width: f64,
    pub height: f64,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl Cylinder {
    pub fn modulus(&self) -> f64 {
        self.width / self.height
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }
}

/// Cylinder decomposition of a surface in one direction. The saddle
/// connections and the rotated copy of the surface live in coordinates
/// where the direction is horizontal; every connection is oriented to
/// the right.
#[derive(Clone, Debug)]
pub struct CylinderDecomposition {
    pub direction: Slope,
    pub is_periodic: bool,
    /// The surface rotated so that `direction` is horizontal.
    pub rotated: TranslationSurface,
    pub connections: Vec<SaddleConnection>,
    pub cylinders: Vec<Cylinder>,
}

/// Whether the unit direction `d` lies in the wedge `[lo, hi)`: closed
/// on the outgoing side, open on the incoming one, so that every germ
/// belongs to exactly one corner of its cone point.
fn wedge_contains(lo: Vec2, hi: Vec2, d: Vec2) -> bool {
    if lo.cross(d).abs() < 1e-12 && lo.dot(d) > 0.0 {
        return true;
    }
    if hi.cross(d).abs() < 1e-12 && hi.dot(d) > 0.0 {
        return false;
    }
    lo.cross(d) > 0.0 && d.cross(hi) > 0.0
}

/// Horizontal extent `(left, right)` of a convex polygon at height `y`.
fn cross_section(poly: &Polygon, y: f64, eps: f64) -> (f64, f64) {
    let k = poly.len();
    let (mut left, mut right) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..k {
        let a = poly.vertex(i);
        let b = poly.vertex((i + 1) % k);
        if (a.y - y).abs() < eps {
            left = left.min(a.x);
            right = right.max(a.x);
        }
        if (a.y - y).abs() >= eps && (b.y - y).abs() >= eps && (a.y - y) * (b.y - y) < 0.0 {
            let x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
            left = left.min(x);
            right = right.max(x);
        }
    }
    (left, right)
}

/// Horizontal chord cut by a saddle connection in one polygon.
#[derive(Clone)]
struct ScChord {
    y: f64,
    x0: f64,
    x1: f64,
    sc: usize,
}

/// Horizontal slab of one polygon between two consecutive singular-leaf
/// levels.
struct Band {
    polygon: usize,
    lo: f64,
    hi: f64,
    area: f64,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Decompose the surface into maximal flat cylinders in the direction
/// `d`. The direction is rotated to horizontal, the two horizontal
/// separatrices of every corner germ are traced to the next singularity
/// (budget `10^3` diameters; exhaustion reports a non-periodic
/// direction instead of failing), and the complement of the resulting
/// saddle connections is assembled into cylinders.
pub fn cylinder_decomposition(
    s: &TranslationSurface,
    d: Slope,
) -> Result<CylinderDecomposition, PeriodicError> {
    let u = d.direction();
    let rot = Mat2::rotation(-u.y.atan2(u.x));
    let rs = s.transformed(&rot)?;
    let budget = 1000.0 * rs.max_polygon_diameter();
    let eps = rs.tol().eps_len;
    let lvl_eps = 10.0 * eps;
    let right = Vec2::new(1.0, 0.0);

    // horizontal separatrices, one per corner germ containing the
    // rightward direction; each unoriented saddle connection in the
    // horizontal direction is found exactly once
    let mut connections: Vec<SaddleConnection> = Vec::new();
    for p in 0..rs.polygons().len() {
        for v in 0..rs.polygon(p).len() {
            let c = Corner { polygon: p, vertex: v };
            let (lo, hi) = rs.corner_wedge(c);
            if !wedge_contains(lo, hi, right) {
                continue;
            }
            match trace_ray_from_corner(&rs, c, right, budget)? {
                RayOutcome::Hit { length, .. } => {
                    let sc = trace_saddle_connection(&rs, c, Vec2::new(length, 0.0))?;
                    connections.push(sc);
                }
                RayOutcome::Budget { .. } => {
                    return Ok(CylinderDecomposition {
                        direction: d,
                        is_periodic: false,
                        rotated: rs,
                        connections: Vec::new(),
                        cylinders: Vec::new(),
                    });
                }
            }
        }
    }

    // index the chords the connections cut in each polygon; a
    // connection along a glued side is registered on both sides
    let np = rs.polygons().len();
    let mut chords: Vec<Vec<ScChord>> = vec![Vec::new(); np];
    for (i, sc) in connections.iter().enumerate() {
        for seg in &sc.segments {
            chords[seg.polygon].push(ScChord {
                y: seg.entry_point.y,
                x0: seg.entry_point.x,
                x1: seg.exit_point.x,
                sc: i,
            });
        }
        if let Some(side) = sc.side {
            let shift = rs.shift_across(side);
            let seg = &sc.segments[0];
            chords[rs.glued(side).polygon].push(ScChord {
                y: seg.entry_point.y + shift.y,
                x0: seg.entry_point.x + shift.x,
                x1: seg.exit_point.x + shift.x,
                sc: i,
            });
        }
    }

    // cut levels: vertex heights and chord heights, clustered
    let mut bands: Vec<Band> = Vec::new();
    let mut bands_by_poly: Vec<Vec<usize>> = vec![Vec::new(); np];
    for p in 0..np {
        let poly = rs.polygon(p);
        let mut levels: Vec<f64> = poly.vertices().iter().map(|v| v.y).collect();
        levels.extend(chords[p].iter().map(|c| c.y));
        levels.sort_by(f64::total_cmp);
        levels.dedup_by(|a, b| (*a - *b).abs() < lvl_eps);
        for w in levels.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let (l0, r0) = cross_section(poly, lo, lvl_eps);
            let (l1, r1) = cross_section(poly, hi, lvl_eps);
            let area = 0.5 * ((r0 - l0) + (r1 - l1)) * (hi - lo);
            bands_by_poly[p].push(bands.len());
            bands.push(Band { polygon: p, lo, hi, area });
        }
    }
    if bands.is_empty() {
        return Err(PeriodicError::Inconsistent("no bands".into()));
    }
    let min_height = bands
        .iter()
        .map(|b| b.hi - b.lo)
        .fold(f64::INFINITY, f64::min);
    let delta = 0.45 * min_height;

    let blocked = |p: usize, level: f64| chords[p].iter().any(|c| (c.y - level).abs() < lvl_eps);

    let mut uf = UnionFind::new(bands.len());
    let mut merged_up = vec![false; bands.len()];
    let mut merged_down = vec![false; bands.len()];

    // vertically adjacent bands communicate unless a saddle connection
    // runs along the interface (a horizontal chord spans the full width
    // of a convex polygon at its level)
    for list in &bands_by_poly {
        for w in list.windows(2) {
            let (below, above) = (w[0], w[1]);
            if !blocked(bands[below].polygon, bands[below].hi) {
                uf.union(below, above);
                merged_up[below] = true;
                merged_down[above] = true;
            }
        }
    }

    // bands communicate across non-horizontal glued sides wherever
    // their height ranges overlap
    for p in 0..np {
        let poly = rs.polygon(p);
        for side in 0..poly.len() {
            let here = SideRef::new(p, side);
            let there = rs.glued(here);
            if (there.polygon, there.side) < (p, side) {
                continue;
            }
            let e = poly.edge(side);
            if e.y.abs() < lvl_eps {
                continue;
            }
            let a = poly.vertex(side);
            let (ylo, yhi) = (a.y.min(a.y + e.y), a.y.max(a.y + e.y));
            let shift = rs.shift_across(here).y;
            for &bi in &bands_by_poly[p] {
                let clo = bands[bi].lo.max(ylo);
                let chi = bands[bi].hi.min(yhi);
                if chi - clo < lvl_eps {
                    continue;
                }
                for &bj in &bands_by_poly[there.polygon] {
                    let ov = (chi + shift).min(bands[bj].hi) - (clo + shift).max(bands[bj].lo);
                    if ov > 0.5 * (chi - clo).min(bands[bj].hi - bands[bj].lo) {
                        uf.union(bi, bj);
                    }
                }
            }
        }
    }

    // group bands into cylinders
    let mut class_of = vec![usize::MAX; bands.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..bands.len() {
        let r = uf.find(i);
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_of[r]].push(i);
    }

    let mut cylinders = Vec::with_capacity(classes.len());
    for members in &classes {
        let area: f64 = members.iter().map(|&i| bands[i].area).sum();
        let top_band = members
            .iter()
            .copied()
            .find(|&i| !merged_up[i])
            .ok_or_else(|| PeriodicError::Inconsistent("cylinder without a top".into()))?;
        let bottom_band = members
            .iter()
            .copied()
            .find(|&i| !merged_down[i])
            .ok_or_else(|| PeriodicError::Inconsistent("cylinder without a bottom".into()))?;
        let (width, top) =
            boundary_arcs(&rs, &connections, &chords, &bands[top_band], true, delta, budget)?;
        let (_, bottom) =
            boundary_arcs(&rs, &connections, &chords, &bands[bottom_band], false, delta, budget)?;
        let bottom: Vec<usize> = bottom.into_iter().rev().collect();
        cylinders.push(Cylinder {
            width,
            height: area / width,
            top,
            bottom,
        });
    }

    let total: f64 = cylinders.iter().map(|c| c.area()).sum();
    if (total - rs.area()).abs() > rs.tol().eps_rel * rs.area().max(1.0) * 100.0 {
        return Err(PeriodicError::Inconsistent(format!(
            "cylinder areas sum to {total}, surface area is {}",
            rs.area()
        )));
    }
    let mut tops = vec![0usize; connections.len()];
    let mut bottoms = vec![0usize; connections.len()];
    for c in &cylinders {
        for &i in &c.top {
            tops[i] += 1;
        }
        for &i in &c.bottom {
            bottoms[i] += 1;
        }
    }
    if tops.iter().any(|&k| k != 1) || bottoms.iter().any(|&k| k != 1) {
        return Err(PeriodicError::Inconsistent(
            "every connection must bound one top and one bottom".into(),
        ));
    }

    Ok(CylinderDecomposition {
        direction: d,
        is_periodic: true,
        rotated: rs,
        connections,
        cylinders,
    })
}

/// Trace the closed leaf at distance `delta` inside the given boundary
/// band and read off the boundary saddle connections in flow order.
/// Returns the leaf length (the cylinder width) and the arcs.
fn boundary_arcs(
    rs: &TranslationSurface,
    connections: &[SaddleConnection],
    chords: &[Vec<ScChord>],
    band: &Band,
    top: bool,
    delta: f64,
    budget: f64,
) -> Result<(f64, Vec<usize>), PeriodicError> {
    let lvl_eps = 10.0 * rs.tol().eps_len;
    let y = if top { band.hi - delta } else { band.lo + delta };
    let (l, r) = cross_section(rs.polygon(band.polygon), y, lvl_eps);
    let start = Vec2::new(0.5 * (l + r), y);
    let out = trace_from_point(rs, band.polygon, start, Vec2::new(1.0, 0.0), budget)?;
    let leaf = match out {
        FlowOutcome::Closed { length, chords } => (length, chords),
        FlowOutcome::Singular { .. } => {
            return Err(PeriodicError::Inconsistent(
                "boundary leaf hit a singularity".into(),
            ))
        }
        FlowOutcome::Budget => return Err(PeriodicError::NotPeriodic),
    };

    // find one connection bounding this band: the first leaf chord with
    // a connection chord directly across
    let mut first: Option<usize> = None;
    'outer: for ch in &leaf.1 {
        let level = if top { ch.a.y + delta } else { ch.a.y - delta };
        let (x0, x1) = (ch.a.x, ch.b.x);
        for c in &chords[ch.polygon] {
            if (c.y - level).abs() < lvl_eps && x1.min(c.x1) - x0.max(c.x0) > lvl_eps {
                first = Some(c.sc);
                break 'outer;
            }
        }
    }
    let first = first.ok_or_else(|| {
        PeriodicError::Inconsistent("boundary leaf found no adjacent connection".into())
    })?;

    // walk the boundary rightward: just inside the cylinder the
    // boundary is flat even at a singularity, so the outgoing germ of
    // the next arc sits exactly pi beyond the incoming germ of the
    // previous one, turning through the cylinder's side of the link
    let width = leaf.0;
    let mut arcs = vec![first];
    let mut total = connections[first].length();
    while total < width - 1e-7 * width.max(1.0) {
        let last = &connections[*arcs.last().unwrap()];
        let class = last.end_class;
        let cone = rs.cone_angles()[class];
        let (_, angle_in) = rs.germ_angle(last.end, Vec2::new(-1.0, 0.0));
        let target = if top {
            (angle_in + std::f64::consts::PI).rem_euclid(cone)
        } else {
            (angle_in - std::f64::consts::PI).rem_euclid(cone)
        };
        let next = connections
            .iter()
            .position(|sc| {
                if sc.start_class != class {
                    return false;
                }
                let (_, a) = rs.germ_angle(sc.start, Vec2::new(1.0, 0.0));
                let d = (a - target).rem_euclid(cone);
                d < 1e-7 || cone - d < 1e-7
            })
            .ok_or_else(|| {
                PeriodicError::Inconsistent("boundary walk found no successor germ".into())
            })?;
        arcs.push(next);
        total += connections[next].length();
        if arcs.len() > 4 * connections.len() + 8 {
            return Err(PeriodicError::Inconsistent(
                "boundary walk failed to close".into(),
            ));
        }
    }
    if (total - width).abs() > 1e-7 * width.max(1.0) {
        return Err(PeriodicError::Inconsistent(format!(
            "boundary length {total} does not match width {width}"
        )));
    }
    Ok((width, arcs))
}
