use crate::SurfaceError;
use geom_core::{interior_angles, Mat2, Polygon, Tolerance, Vec2};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SideRef {
    pub polygon: usize,
    pub side: usize,
}

impl SideRef {
    pub fn new(polygon: usize, side: usize) -> Self {
        Self { polygon, side }
    }
}

/// A polygon corner, identified by polygon index and vertex index.
/// The corner at vertex `v` is bounded by side `v-1` (incoming) and
/// side `v` (outgoing).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub polygon: usize,
    pub vertex: usize,
}

/// Cyclic structure of corners around one cone point. Corners are
/// listed in counterclockwise order; `offsets[i]` is the angular
/// position where corner `i` starts on the circle of circumference
/// `cone_angle`.
#[derive(Clone, Debug)]
pub struct LinkCircle {
    pub cone_angle: f64,
    pub corners: Vec<Corner>,
    pub offsets: Vec<f64>,
    pub interior: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct TranslationSurface {
    polygons: Vec<Polygon>,
    gluing: Vec<Vec<SideRef>>,
    class_of: Vec<Vec<usize>>,
    links: Vec<LinkCircle>,
    cone_angles: Vec<f64>,
    genus: usize,
    area: f64,
    tol: Tolerance,
}

impl TranslationSurface {
    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn polygon(&self, p: usize) -> &Polygon {
        &self.polygons[p]
    }

    pub fn tol(&self) -> &Tolerance {
        &self.tol
    }

    pub fn glued(&self, s: SideRef) -> SideRef {
        self.gluing[s.polygon][s.side]
    }

    /// Translation taking a point on side `s` (in the coordinates of
    /// `s.polygon`) to the identified point of the partner polygon.
    pub fn shift_across(&self, s: SideRef) -> Vec2 {
        let t = self.glued(s);
        let pt = &self.polygons[t.polygon];
        let ps = &self.polygons[s.polygon];
        pt.vertex(t.side + 1) - ps.vertex(s.side)
    }

    pub fn singularity_count(&self) -> usize {
        self.links.len()
    }

    pub fn cone_angles(&self) -> &[f64] {
        &self.cone_angles
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn links(&self) -> &[LinkCircle] {
        &self.links
    }

    pub fn class_of(&self, c: Corner) -> usize {
        self.class_of[c.polygon][c.vertex]
    }

    /// Shortest side length over all polygons (the `l0` of the
    /// polygonal representation).
    pub fn min_side_length(&self) -> f64 {
        self.polygons
            .iter()
            .flat_map(|p| p.edges().map(|e| e.norm()).collect::<Vec<_>>())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_polygon_diameter(&self) -> f64 {
        self.polygons
            .iter()
            .map(|p| p.diameter())
            .fold(0.0, f64::max)
    }

    /// The two boundary rays of the interior wedge at a corner:
    /// `(lo, hi)` with the interior swept counterclockwise from `lo`
    /// to `hi`.
    pub fn corner_wedge(&self, c: Corner) -> (Vec2, Vec2) {
        let p = &self.polygons[c.polygon];
        let k = p.len();
        let lo = p.edge(c.vertex).normalized();
        let hi = (-p.edge((c.vertex + k - 1) % k)).normalized();
        (lo, hi)
    }

    /// Angular coordinate on the link circle of the germ `(corner, u)`,
    /// where `u` points from the corner into (or along the boundary of)
    /// the polygon wedge. Returns `(class, angle)`.
    pub fn germ_angle(&self, c: Corner, u: Vec2) -> (usize, f64) {
        let class = self.class_of(c);
        let link = &self.links[class];
        let idx = link
            .corners
            .iter()
            .position(|&k| k == c)
            .expect("corner belongs to its class");
        let (lo, _) = self.corner_wedge(c);
        let mut a = lo.cross(u).atan2(lo.dot(u));
        if a < -self.tol.eps_rel {
            a += 2.0 * PI;
        }
        let a = a.clamp(0.0, link.interior[idx]);
        let total = link.cone_angle;
        let mut angle = link.offsets[idx] + a;
        if angle >= total {
            angle -= total;
        }
        (class, angle)
    }

    /// Apply a linear map to every polygon; the gluing combinatorics is
    /// unchanged. Fails if the image violates the surface invariants
    /// (only possible for singular maps).
    pub fn transformed(&self, m: &Mat2) -> Result<TranslationSurface, SurfaceError> {
        let polygons = self
            .polygons
            .iter()
            .map(|p| Polygon::new(p.vertices().iter().map(|&v| m.apply(v)).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut pairs = Vec::new();
        for (pi, sides) in self.gluing.iter().enumerate() {
            for (si, &t) in sides.iter().enumerate() {
                if (pi, si) < (t.polygon, t.side) {
                    pairs.push((SideRef::new(pi, si), t));
                }
            }
        }
        build_surface(polygons, &pairs)
    }
}

/// Follow the counterclockwise successor of a corner around its cone
/// point: cross the incoming side of the corner.
fn next_corner(gluing: &[Vec<SideRef>], polygons: &[Polygon], c: Corner) -> Corner {
    let k = polygons[c.polygon].len();
    let incoming = (c.vertex + k - 1) % k;
    let t = gluing[c.polygon][incoming];
    Corner {
        polygon: t.polygon,
        vertex: t.side,
    }
}

pub fn build_surface(
    polygons: Vec<Polygon>,
    pairs: &[(SideRef, SideRef)],
) -> Result<TranslationSurface, SurfaceError> {
    let scale = polygons.iter().map(|p| p.diameter()).fold(0.0, f64::max);
    let tol = Tolerance::scaled(scale.max(1.0));

    // involution table
    let mut gluing: Vec<Vec<Option<SideRef>>> =
        polygons.iter().map(|p| vec![None; p.len()]).collect();
    let mut seen: Vec<Vec<usize>> = polygons.iter().map(|p| vec![0; p.len()]).collect();
    for &(a, b) in pairs {
        for s in [a, b] {
            if s.polygon >= polygons.len() || s.side >= polygons[s.polygon].len() {
                return Err(SurfaceError::SideOutOfRange(s.polygon, s.side));
            }
        }
        if a == b {
            return Err(SurfaceError::SelfGluedSide(a.polygon, a.side));
        }
        gluing[a.polygon][a.side] = Some(b);
        gluing[b.polygon][b.side] = Some(a);
        seen[a.polygon][a.side] += 1;
        seen[b.polygon][b.side] += 1;
    }
    for (pi, counts) in seen.iter().enumerate() {
        for (si, &c) in counts.iter().enumerate() {
            if c != 1 {
                return Err(SurfaceError::IncompleteGluing(pi, si, c));
            }
        }
    }
    let gluing: Vec<Vec<SideRef>> = gluing
        .into_iter()
        .map(|v| v.into_iter().map(|s| s.unwrap()).collect())
        .collect();

    // translation gluing: edge vectors must be opposite
    for &(a, b) in pairs {
        let ea = polygons[a.polygon].edge(a.side);
        let eb = polygons[b.polygon].edge(b.side);
        if (ea + eb).norm() > tol.eps_len {
            if (ea - eb).norm() < tol.eps_len {
                return Err(SurfaceError::OrientationError(
                    a.polygon, a.side, b.polygon, b.side,
                ));
            }
            return Err(SurfaceError::MismatchedSides(
                a.polygon, a.side, b.polygon, b.side,
            ));
        }
    }

    // vertex classes by cycling around each cone point
    let angles: Vec<Vec<f64>> = polygons.iter().map(interior_angles).collect();
    let mut class_of: Vec<Vec<Option<usize>>> =
        polygons.iter().map(|p| vec![None; p.len()]).collect();
    let mut links = Vec::new();
    let mut cone_angles = Vec::new();
    for p0 in 0..polygons.len() {
        for v0 in 0..polygons[p0].len() {
            if class_of[p0][v0].is_some() {
                continue;
            }
            let class = links.len();
            let start = Corner {
                polygon: p0,
                vertex: v0,
            };
            let mut corners = Vec::new();
            let mut offsets = Vec::new();
            let mut interior = Vec::new();
            let mut total = 0.0;
            let mut c = start;
            loop {
                class_of[c.polygon][c.vertex] = Some(class);
                corners.push(c);
                offsets.push(total);
                let a = angles[c.polygon][c.vertex];
                interior.push(a);
                total += a;
                c = next_corner(&gluing, &polygons, c);
                if c == start {
                    break;
                }
            }
            let turns = (total / (2.0 * PI)).round();
            if turns < 1.0 || (total - turns * 2.0 * PI).abs() > 1e-6 * 2.0 * PI {
                return Err(SurfaceError::ConeAngleError(total));
            }
            let snapped = turns * 2.0 * PI;
            cone_angles.push(snapped);
            links.push(LinkCircle {
                cone_angle: snapped,
                corners,
                offsets,
                interior,
            });
        }
    }
    let class_of: Vec<Vec<usize>> = class_of
        .into_iter()
        .map(|v| v.into_iter().map(|c| c.unwrap()).collect())
        .collect();

    // discrete Gauss-Bonnet: sum of (cone/2pi - 1) = 2g - 2
    let excess: f64 = cone_angles.iter().map(|&a| a / (2.0 * PI) - 1.0).sum();
    let genus = ((excess + 2.0) / 2.0).round();
    debug_assert!((genus * 2.0 - 2.0 - excess).abs() < 1e-6);

    let area = polygons.iter().map(|p| p.signed_area()).sum();

    Ok(TranslationSurface {
        polygons,
        gluing,
        class_of,
        links,
        cone_angles,
        genus: genus as usize,
        area,
        tol,
    })
}

/// Hypotheses on the polygonal representation used by the intersection
/// bounds: convexity with obtuse-or-right angles (P1), the weaker
/// consecutive-angle-sum condition (P1'), and the no-self-gluing
/// condition (P2).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ValidationReport {
    pub satisfies_p1: bool,
    pub satisfies_p1prime: bool,
    pub satisfies_p2: bool,
    pub theta0: f64,
}

pub fn validate_hypotheses(s: &TranslationSurface) -> ValidationReport {
    let tol = s.tol();
    let eps = 1e-9;
    let mut p1 = true;
    let mut p1prime = true;
    let mut theta0 = f64::INFINITY;
    for p in s.polygons() {
        if !p.is_convex(tol) {
            p1 = false;
            p1prime = false;
        }
        let angles = interior_angles(p);
        for &a in &angles {
            theta0 = theta0.min(a);
            if a < PI / 2.0 - eps {
                p1 = false;
            }
        }
    }
    // (P1'): around every cone point, the sum of two consecutive corner
    // angles is at least pi
    for link in s.links() {
        let k = link.interior.len();
        for i in 0..k {
            if link.interior[i] + link.interior[(i + 1) % k] < PI - eps {
                p1prime = false;
            }
        }
    }
    let mut p2 = true;
    for pi in 0..s.polygons().len() {
        for si in 0..s.polygon(pi).len() {
            if s.glued(SideRef::new(pi, si)).polygon == pi {
                p2 = false;
            }
        }
    }
    ValidationReport {
        satisfies_p1: p1,
        satisfies_p1prime: p1prime,
        satisfies_p2: p2,
        theta0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use geom_core::semi_regular_polygon;

    use crate::examples::{square_torus, three_square_l};

    #[test]
    fn torus_structure() {
        let t = square_torus();
        assert_eq!(t.singularity_count(), 1);
        assert!((t.cone_angles()[0] - 2.0 * PI).abs() < 1e-12);
        assert_eq!(t.genus(), 1);
        assert!((t.area() - 1.0).abs() < 1e-12);
        let r = validate_hypotheses(&t);
        assert!(r.satisfies_p1 && r.satisfies_p1prime && !r.satisfies_p2);
        assert!((r.theta0 - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn three_square_l_structure() {
        // cone-angle sum oracle: 12 right angles in one class -> 6 pi,
        // Gauss-Bonnet gives genus 2
        let l = three_square_l();
        assert_eq!(l.singularity_count(), 1);
        assert!((l.cone_angles()[0] - 6.0 * PI).abs() < 1e-12);
        assert_eq!(l.genus(), 2);
        assert!((l.area() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn gluing_is_involutive() {
        let l = three_square_l();
        for pi in 0..l.polygons().len() {
            for si in 0..l.polygon(pi).len() {
                let s = SideRef::new(pi, si);
                assert_eq!(l.glued(l.glued(s)), s);
                // crossing forth and back is the identity translation
                let back = l.shift_across(s) + l.shift_across(l.glued(s));
                assert!(back.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn mismatched_gluing_rejected() {
        let sq = semi_regular_polygon(4, 1.0, 0.0).unwrap();
        let err = build_surface(
            vec![sq],
            &[
                (SideRef::new(0, 0), SideRef::new(0, 1)),
                (SideRef::new(0, 2), SideRef::new(0, 3)),
            ],
        );
        assert!(matches!(err, Err(SurfaceError::MismatchedSides(..))));
    }

    #[test]
    fn link_circle_covers_cone() {
        let l = three_square_l();
        let link = &l.links()[0];
        assert_eq!(link.corners.len(), 12);
        let total: f64 = link.interior.iter().sum();
        assert!((total - link.cone_angle).abs() < 1e-9);
        // germ along the outgoing side of a corner sits at its offset
        for (i, &c) in link.corners.iter().enumerate() {
            let (lo, _) = l.corner_wedge(c);
            let (class, angle) = l.germ_angle(c, lo);
            assert_eq!(class, 0);
            assert!((angle - link.offsets[i]).abs() < 1e-9);
        }
    }
}
