use crate::{GeomError, Tolerance, Vec2};
use serde::{Deserialize, Serialize};

/// Simple polygon stored as counterclockwise vertices; edge vectors are
/// derived. Edge `i` goes from vertex `i` to vertex `i+1 (mod count)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Polygon {
    vertices: Vec<Vec2>,
}

impl Polygon {
    pub fn new(vertices: Vec<Vec2>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        let p = Self { vertices };
        let area = p.signed_area();
        if area <= 0.0 {
            return Err(GeomError::NotCounterclockwise(area));
        }
        Ok(p)
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge vector from vertex `i` to vertex `i+1`.
    pub fn edge(&self, i: usize) -> Vec2 {
        let n = self.vertices.len();
        self.vertices[(i + 1) % n] - self.vertices[i % n]
    }

    pub fn edges(&self) -> impl Iterator<Item = Vec2> + '_ {
        (0..self.vertices.len()).map(|i| self.edge(i))
    }

    /// Shoelace formula; positive for counterclockwise orientation.
    pub fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        let mut s = 0.0;
        for i in 0..n {
            s += self.vertices[i].cross(self.vertices[(i + 1) % n]);
        }
        s / 2.0
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.norm()).sum()
    }

    pub fn diameter(&self) -> f64 {
        let mut d = 0.0f64;
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                d = d.max((b - a).norm());
            }
        }
        d
    }

    pub fn is_convex(&self, tol: &Tolerance) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let e0 = self.edge(i);
            let e1 = self.edge(i + 1);
            e0.cross(e1) > -tol.eps_rel * e0.norm() * e1.norm()
        })
    }

    pub fn translated(&self, t: Vec2) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|&v| v + t).collect(),
        }
    }

    /// Strict interior test for convex polygons.
    pub fn contains_interior(&self, p: Vec2, tol: &Tolerance) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let e = self.edge(i);
            e.cross(p - self.vertices[i]) > tol.eps_len * e.norm()
        })
    }
}

/// Semi-regular polygon with `2n` sides alternating between lengths `a`
/// and `b`: edge `j` is `a (cos(j pi/n), sin(j pi/n))` for even `j` and
/// `b (...)` for odd `j`. When one of `a`, `b` vanishes the zero edges
/// drop out and a regular `n`-gon of the other side length remains.
/// The first vertex sits at the origin, so edge 0 is horizontal.
pub fn semi_regular_polygon(n: u32, a: f64, b: f64) -> Result<Polygon, GeomError> {
    assert!(n >= 2, "need n >= 2");
    assert!(a >= 0.0 && b >= 0.0);
    if a == 0.0 && b == 0.0 {
        return Err(GeomError::DegeneratePolygon);
    }
    let mut vertices = Vec::with_capacity(2 * n as usize);
    let mut p = Vec2::ZERO;
    for j in 0..(2 * n) {
        let len = if j % 2 == 0 { a } else { b };
        if len == 0.0 {
            continue;
        }
        vertices.push(p);
        let ang = (j as f64) * std::f64::consts::PI / (n as f64);
        p = p + Vec2::new(ang.cos(), ang.sin()) * len;
    }
    Polygon::new(vertices)
}

/// One interior angle per vertex, in radians.
pub fn interior_angles(p: &Polygon) -> Vec<f64> {
    let n = p.len();
    (0..n)
        .map(|i| {
            let incoming = p.edge((i + n - 1) % n);
            let outgoing = p.edge(i);
            // interior angle = pi - exterior turn
            std::f64::consts::PI - incoming.cross(outgoing).atan2(incoming.dot(outgoing))
        })
        .map(|a| {
            if a <= 0.0 {
                a + 2.0 * std::f64::consts::PI
            } else {
                a
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_square() {
        let p = semi_regular_polygon(4, 1.0, 0.0).unwrap();
        assert_eq!(p.len(), 4);
        assert!((p.signed_area() - 1.0).abs() < 1e-12);
        for a in interior_angles(&p) {
            assert!((a - PI / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn regular_hexagon_angles() {
        let p = semi_regular_polygon(3, 1.0, 1.0).unwrap();
        assert_eq!(p.len(), 6);
        for a in interior_angles(&p) {
            assert!((a - 2.0 * PI / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn octagon_4_1_2() {
        // shoelace oracle over the explicit edge list
        let p = semi_regular_polygon(4, 1.0, 2.0).unwrap();
        assert_eq!(p.len(), 8);
        assert!((p.perimeter() - 12.0).abs() < 1e-12);
        for a in interior_angles(&p) {
            assert!((a - 3.0 * PI / 4.0).abs() < 1e-12);
        }
        let mut shoelace = 0.0;
        let vs = p.vertices();
        for i in 0..8 {
            let (u, v) = (vs[i], vs[(i + 1) % 8]);
            shoelace += u.x * v.y - v.x * u.y;
        }
        assert!((p.signed_area() - shoelace / 2.0).abs() < 1e-12);
    }

    #[test]
    fn equilateral_triangle() {
        let p = semi_regular_polygon(3, 0.0, 1.0).unwrap();
        assert_eq!(p.len(), 3);
        for a in interior_angles(&p) {
            assert!((a - PI / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_rejected() {
        assert!(semi_regular_polygon(5, 0.0, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn edges_close_up(n in 2u32..9, a in 0.0f64..4.0, b in 0.0f64..4.0) {
            prop_assume!(a > 1e-3 || b > 1e-3);
            let p = semi_regular_polygon(n, a, b).unwrap();
            let sum = p.edges().fold(Vec2::ZERO, |acc, e| acc + e);
            prop_assert!(sum.norm() < 1e-9 * (a + b));
            prop_assert!(p.is_convex(&Tolerance::default()));
            // angle sum of a convex V-gon
            let total: f64 = interior_angles(&p).iter().sum();
            let expect = (p.len() as f64 - 2.0) * PI;
            prop_assert!((total - expect).abs() < 1e-9);
        }
    }
}
