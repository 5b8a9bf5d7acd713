//! Points, geodesics, distances and direction angles on the upper
//! half-plane.

use crate::{slope_eq, TeichError};
use geom_core::{Mat2, Tolerance};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use trajectory::Slope;

/// Point of the open upper half-plane, standing for the deformation
/// class of a surface.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    pub x: f64,
    pub y: f64,
}

impl DiskPoint {
    pub fn new(x: f64, y: f64) -> Result<DiskPoint, TeichError> {
        if !(x.is_finite() && y.is_finite() && y > 0.0) {
            return Err(TeichError::BadPoint(x, y));
        }
        Ok(DiskPoint { x, y })
    }

    pub fn i() -> DiskPoint {
        DiskPoint { x: 0.0, y: 1.0 }
    }

    /// An upper-triangular unimodular matrix deforming the base point
    /// `i` to this point: [`psi`] of the result returns `self`.
    pub fn matrix(&self) -> Mat2 {
        let r = self.y.sqrt();
        Mat2::new(1.0 / r, self.x / r, 0.0, r)
    }
}

/// Complete geodesic, named by its unordered pair of distinct boundary
/// points; a vertical line when one of them is `Infinite`.
#[derive(Clone, Copy, Debug)]
pub struct Geodesic {
    pub e1: Slope,
    pub e2: Slope,
}

impl Geodesic {
    pub fn new(e1: Slope, e2: Slope) -> Result<Geodesic, TeichError> {
        if slope_eq(e1, e2) {
            return Err(TeichError::BadGeodesic);
        }
        Ok(Geodesic { e1, e2 })
    }
}

/// Half-plane point of the deformation `M·S` of the base surface:
/// the Möbius image `(d·i + b)/(c·i + a)` of `i`.
pub fn psi(m: &Mat2) -> Result<DiskPoint, TeichError> {
    if !m.is_unimodular(&Tolerance::default()) {
        return Err(TeichError::NotUnimodular(m.det()));
    }
    let den = m.a * m.a + m.c * m.c;
    DiskPoint::new((m.a * m.b + m.c * m.d) / den, m.det() / den)
}

/// Standard Möbius action `z ↦ (a z + b)/(c z + d)` of a real matrix
/// with positive determinant.
pub fn mobius(g: &Mat2, z: &DiskPoint) -> Result<DiskPoint, TeichError> {
    let (x, y) = (z.x, z.y);
    let den = {
        let re = g.c * x + g.d;
        re * re + g.c * g.c * y * y
    };
    let re = (g.a * x + g.b) * (g.c * x + g.d) + g.a * g.c * y * y;
    DiskPoint::new(re / den, g.det() * y / den)
}

/// Hyperbolic distance from a point to a complete geodesic. For a
/// vertical line over `a` it is `acosh(|z − a| / Im z)`; the general
/// case sends the endpoints to `0` and `∞` by a Möbius map first.
pub fn dist_to_geodesic(z: &DiskPoint, g: &Geodesic) -> f64 {
    let cosh = match (g.e1, g.e2) {
        (Slope::Infinite, Slope::Finite(a)) | (Slope::Finite(a), Slope::Infinite) => {
            ((z.x - a).hypot(z.y)) / z.y
        }
        (Slope::Finite(p0), Slope::Finite(q0)) => {
            let (p, q) = if p0 < q0 { (p0, q0) } else { (q0, p0) };
            // w = (z − p)/(q − z) maps the endpoints to 0 and ∞.
            let re = (z.x - p) * (q - z.x) - z.y * z.y;
            let im = z.y * (q - p);
            re.hypot(im) / im
        }
        _ => unreachable!("geodesic with two infinite endpoints"),
    };
    cosh.max(1.0).acosh()
}

/// Angle in `(0, π/2]` between the images under `m` of the direction
/// vectors of two slopes: the angle, on the deformed surface, between
/// saddle connections whose base-surface slopes are `d` and `d2`.
pub fn theta_from_matrix(m: &Mat2, d: Slope, d2: Slope) -> Result<f64, TeichError> {
    if slope_eq(d, d2) {
        return Err(TeichError::EqualSlopes);
    }
    let u = m.apply(d.direction());
    let v = m.apply(d2.direction());
    let ang = u.cross(v).abs().atan2(u.dot(v));
    Ok(if ang > FRAC_PI_2 { PI - ang } else { ang })
}

/// [`theta_from_matrix`] at any matrix representing the point; well
/// defined because two such matrices differ by a rotation.
pub fn theta(x: &DiskPoint, d: Slope, d2: Slope) -> Result<f64, TeichError> {
    theta_from_matrix(&x.matrix(), d, d2)
}
