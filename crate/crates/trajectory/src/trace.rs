use crate::TrajectoryError;
use geom_core::{Polygon, Vec2};
use surface_model::{Corner, SideRef, TranslationSurface};

/// Where a segment endpoint sits on its polygon boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Port {
    Vertex(usize),
    /// Interior point of a side, at parameter `t in (0,1)` from the
    /// side's first vertex.
    Side { side: usize, t: f64 },
}

impl Port {
    pub fn vertex(&self) -> Option<usize> {
        match self {
            Port::Vertex(v) => Some(*v),
            Port::Side { .. } => None,
        }
    }

    pub fn side(&self) -> Option<usize> {
        match self {
            Port::Vertex(_) => None,
            Port::Side { side, .. } => Some(*side),
        }
    }
}

/// Maximal straight piece of a trajectory inside one polygon.
#[derive(Clone, Debug)]
pub struct Segment {
    pub polygon: usize,
    pub entry_point: Vec2,
    pub exit_point: Vec2,
    pub entry: Port,
    pub exit: Port,
}

impl Segment {
    pub fn vector(&self) -> Vec2 {
        self.exit_point - self.entry_point
    }

    pub fn length(&self) -> f64 {
        self.vector().norm()
    }
}

/// Direction class of a vector, recorded so that a vector and its
/// negative get the same value: `-x/y` for non-horizontal vectors,
/// `Infinite` for horizontal ones (direction `(1,0)`).
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum Slope {
    Finite(f64),
    Infinite,
}

impl Slope {
    pub fn of_vector(v: Vec2) -> Slope {
        if v.y.abs() <= 1e-12 * v.norm() {
            Slope::Infinite
        } else {
            Slope::Finite(-v.x / v.y)
        }
    }

    /// Unit vector with this slope: `(-d, 1)` normalized, or `(1, 0)`.
    pub fn direction(self) -> Vec2 {
        match self {
            Slope::Infinite => Vec2::new(1.0, 0.0),
            Slope::Finite(d) => Vec2::new(-d, 1.0).normalized(),
        }
    }

    /// Sort key; horizontal sorts last.
    pub fn key(self) -> f64 {
        match self {
            Slope::Infinite => f64::INFINITY,
            Slope::Finite(d) => d,
        }
    }
}

/// Oriented geodesic from one singularity to another with no
/// singularity in its interior.
#[derive(Clone, Debug)]
pub struct SaddleConnection {
    pub start: Corner,
    pub end: Corner,
    pub start_class: usize,
    pub end_class: usize,
    pub holonomy: Vec2,
    pub segments: Vec<Segment>,
    /// Runs along a single polygon side.
    pub is_side: bool,
    /// The side it runs along, when `is_side`.
    pub side: Option<SideRef>,
}

impl SaddleConnection {
    pub fn length(&self) -> f64 {
        self.holonomy.norm()
    }

    pub fn slope(&self) -> Slope {
        Slope::of_vector(self.holonomy)
    }

    /// Single segment across a polygon between two of its vertices,
    /// other than a side.
    pub fn is_diagonal(&self) -> bool {
        self.segments.len() == 1 && !self.is_side
    }

    /// Starts and ends at the same cone point, hence a closed loop.
    pub fn is_closed(&self) -> bool {
        self.start_class == self.end_class
    }
}

/// Whether two corner germs describe the same ray on the surface: same
/// cone point and same angular position on its link circle.
fn germ_eq(s: &TranslationSurface, c1: Corner, d1: Vec2, c2: Corner, d2: Vec2) -> bool {
    let (k1, a1) = s.germ_angle(c1, d1.normalized());
    let (k2, a2) = s.germ_angle(c2, d2.normalized());
    if k1 != k2 {
        return false;
    }
    let total = s.cone_angles()[k1];
    let diff = (a1 - a2).rem_euclid(total);
    diff < 1e-9 || total - diff < 1e-9
}

/// Whether `b` traverses the same geodesic arc as `a`, in the opposite
/// direction.
pub fn is_reverse(s: &TranslationSurface, a: &SaddleConnection, b: &SaddleConnection) -> bool {
    let eps = s.tol().eps_len;
    (a.holonomy + b.holonomy).norm() < eps
        && germ_eq(s, a.start, a.holonomy, b.end, -b.holonomy)
        && germ_eq(s, a.end, -a.holonomy, b.start, b.holonomy)
}

/// Whether `a` and `b` are the same geodesic arc, traversed in either
/// direction.
pub fn same_geodesic(s: &TranslationSurface, a: &SaddleConnection, b: &SaddleConnection) -> bool {
    let eps = s.tol().eps_len;
    ((a.holonomy - b.holonomy).norm() < eps && germ_eq(s, a.start, a.holonomy, b.start, b.holonomy))
        || is_reverse(s, a, b)
}

/// Exit of a ray from a convex polygon: first boundary crossing of
/// `pos + t*dir`, `t` above a small threshold.
fn cross_convex(poly: &Polygon, pos: Vec2, dir: Vec2, eps_len: f64) -> Option<(f64, Port)> {
    let k = poly.len();
    let mut best: Option<(f64, Port)> = None;
    for i in 0..k {
        let a = poly.vertex(i);
        let e = poly.edge(i);
        let denom = dir.cross(e);
        let elen = e.norm();
        if denom.abs() < 1e-14 * elen {
            continue;
        }
        let d = a - pos;
        let t = d.cross(e) / denom;
        let s = d.cross(dir) / denom;
        if t <= eps_len {
            continue;
        }
        if s * elen < -eps_len || (s - 1.0) * elen > eps_len {
            continue;
        }
        let port = if s * elen < eps_len {
            Port::Vertex(i)
        } else if (1.0 - s) * elen < eps_len {
            Port::Vertex((i + 1) % k)
        } else {
            Port::Side { side: i, t: s }
        };
        if best.as_ref().map_or(true, |(bt, _)| t < *bt) {
            best = Some((t, port));
        }
    }
    best
}

/// Result of flowing a ray from a corner germ.
#[derive(Clone, Debug)]
pub enum RayOutcome {
    /// Reached a singularity.
    Hit {
        corner: Corner,
        length: f64,
        segments: Vec<Segment>,
    },
    /// Exceeded the length budget without meeting a singularity.
    Budget { length: f64 },
}

/// Flow from the corner `c` in unit direction `dir` (which must point
/// into the closed wedge of the corner) until a singularity is reached
/// or the path length exceeds `max_len`.
pub fn trace_ray_from_corner(
    s: &TranslationSurface,
    c: Corner,
    dir: Vec2,
    max_len: f64,
) -> Result<RayOutcome, TrajectoryError> {
    let eps = s.tol().eps_len;
    let dir = dir.normalized();
    let (lo, hi) = s.corner_wedge(c);

    // along the outgoing side: straight to the next vertex
    if lo.cross(dir).abs() < 1e-12 && lo.dot(dir) > 0.0 {
        return Ok(along_side(s, c.polygon, c.vertex, false, max_len));
    }
    // along the reversed incoming side
    if hi.cross(dir).abs() < 1e-12 && hi.dot(dir) > 0.0 {
        return Ok(along_side(s, c.polygon, c.vertex, true, max_len));
    }
    if lo.cross(dir) < -1e-12 || dir.cross(hi) < -1e-12 {
        return Err(TrajectoryError::OutsideWedge);
    }

    let mut polygon = c.polygon;
    let mut pos = s.polygon(polygon).vertex(c.vertex);
    let mut entry = Port::Vertex(c.vertex);
    let mut acc = 0.0;
    let mut segments = Vec::new();
    loop {
        let (t, port) = cross_convex(s.polygon(polygon), pos, dir, eps)
            .ok_or_else(|| TrajectoryError::BadHolonomy("ray failed to exit polygon".into()))?;
        let exit_point = pos + dir * t;
        segments.push(Segment {
            polygon,
            entry_point: pos,
            exit_point,
            entry,
            exit: port,
        });
        acc += t;
        if let Port::Vertex(v) = port {
            return Ok(RayOutcome::Hit {
                corner: Corner {
                    polygon,
                    vertex: v,
                },
                length: acc,
                segments,
            });
        }
        if acc > max_len {
            return Ok(RayOutcome::Budget { length: acc });
        }
        let side = port.side().unwrap();
        let here = SideRef::new(polygon, side);
        let target = s.glued(here);
        pos = exit_point + s.shift_across(here);
        polygon = target.polygon;
        let u = match port {
            Port::Side { t, .. } => t,
            Port::Vertex(_) => unreachable!(),
        };
        entry = Port::Side {
            side: target.side,
            t: 1.0 - u,
        };
        if segments.len() > 1_000_000 {
            return Err(TrajectoryError::Budget(segments.len()));
        }
    }
}

/// Ray running exactly along a polygon side; `backward` follows the
/// incoming side of the corner in reverse.
fn along_side(
    s: &TranslationSurface,
    polygon: usize,
    vertex: usize,
    backward: bool,
    max_len: f64,
) -> RayOutcome {
    let poly = s.polygon(polygon);
    let k = poly.len();
    let (side, target_vertex) = if backward {
        ((vertex + k - 1) % k, (vertex + k - 1) % k)
    } else {
        (vertex, (vertex + 1) % k)
    };
    let len = poly.edge(side).norm();
    if len > max_len {
        return RayOutcome::Budget { length: len };
    }
    let segments = vec![Segment {
        polygon,
        entry_point: poly.vertex(vertex),
        exit_point: poly.vertex(target_vertex),
        entry: Port::Vertex(vertex),
        exit: Port::Vertex(target_vertex),
    }];
    RayOutcome::Hit {
        corner: Corner {
            polygon,
            vertex: target_vertex,
        },
        length: len,
        segments,
    }
}

/// Trace the saddle connection starting at the corner `c` with the
/// given holonomy vector, verifying that it ends at a singularity and
/// meets none on the way.
pub fn trace_saddle_connection(
    s: &TranslationSurface,
    c: Corner,
    holonomy: Vec2,
) -> Result<SaddleConnection, TrajectoryError> {
    let total = holonomy.norm();
    let eps = s.tol().eps_len;
    if total <= eps {
        return Err(TrajectoryError::BadHolonomy("zero holonomy".into()));
    }
    let out = trace_ray_from_corner(s, c, holonomy, total * (1.0 + 1e-9) + eps)?;
    match out {
        RayOutcome::Hit {
            corner,
            length,
            segments,
        } => {
            if (length - total).abs() > eps * 2.0 {
                if length < total {
                    return Err(TrajectoryError::InteriorSingularity);
                }
                return Err(TrajectoryError::BadHolonomy(format!(
                    "first singularity at distance {length}, expected {total}"
                )));
            }
            let is_side = segments.len() == 1
                && matches!(segments[0].entry, Port::Vertex(_))
                && matches!(segments[0].exit, Port::Vertex(_))
                && {
                    let k = s.polygon(segments[0].polygon).len();
                    let a = segments[0].entry.vertex().unwrap();
                    let b = segments[0].exit.vertex().unwrap();
                    (a + 1) % k == b || (b + 1) % k == a
                };
            let side = if is_side {
                let a = segments[0].entry.vertex().unwrap();
                let b = segments[0].exit.vertex().unwrap();
                let k = s.polygon(segments[0].polygon).len();
                let idx = if (a + 1) % k == b { a } else { b };
                Some(SideRef::new(segments[0].polygon, idx))
            } else {
                None
            };
            Ok(SaddleConnection {
                start: c,
                end: corner,
                start_class: s.class_of(c),
                end_class: s.class_of(corner),
                holonomy,
                segments,
                is_side,
                side,
            })
        }
        RayOutcome::Budget { .. } => Err(TrajectoryError::BadHolonomy(
            "no singularity at the endpoint".into(),
        )),
    }
}

/// Straight chord of a flow line inside one polygon.
#[derive(Clone, Copy, Debug)]
pub struct Chord {
    pub polygon: usize,
    pub a: Vec2,
    pub b: Vec2,
}

/// Outcome of flowing from an interior point.
#[derive(Clone, Debug)]
pub enum FlowOutcome {
    /// Returned to the start point: a closed geodesic.
    Closed { length: f64, chords: Vec<Chord> },
    /// Ran into a singularity.
    Singular { length: f64 },
    /// Exceeded the length budget.
    Budget,
}

/// Flow from an interior point of a polygon in unit direction `dir`
/// until the trajectory closes up, meets a singularity, or exceeds
/// `max_len`.
pub fn trace_from_point(
    s: &TranslationSurface,
    polygon: usize,
    start: Vec2,
    dir: Vec2,
    max_len: f64,
) -> Result<FlowOutcome, TrajectoryError> {
    let eps = s.tol().eps_len;
    let dir = dir.normalized();
    let p0 = polygon;
    let mut polygon = polygon;
    let mut pos = start;
    let mut acc = 0.0;
    let mut chords: Vec<Chord> = Vec::new();
    loop {
        let (t, port) = cross_convex(s.polygon(polygon), pos, dir, eps)
            .ok_or_else(|| TrajectoryError::BadHolonomy("ray failed to exit polygon".into()))?;
        // closure test: start point on the current chord
        if polygon == p0 && !chords.is_empty() {
            let u = (start - pos).dot(dir);
            let off = (start - pos) - dir * u;
            if off.norm() < eps && u > -eps && u <= t + eps && acc + u > eps {
                chords.push(Chord {
                    polygon,
                    a: pos,
                    b: start,
                });
                return Ok(FlowOutcome::Closed {
                    length: acc + u,
                    chords,
                });
            }
        }
        let exit_point = pos + dir * t;
        chords.push(Chord {
            polygon,
            a: pos,
            b: exit_point,
        });
        acc += t;
        if matches!(port, Port::Vertex(_)) {
            return Ok(FlowOutcome::Singular { length: acc });
        }
        if acc > max_len {
            return Ok(FlowOutcome::Budget);
        }
        let side = port.side().unwrap();
        let here = SideRef::new(polygon, side);
        pos = exit_point + s.shift_across(here);
        polygon = s.glued(here).polygon;
    }
}
