use serde::Serialize;
use std::f64::consts::PI;
use surface_model::BouwMollerParams;

/// Closed forms for the horizontal geometry of the semi-regular polygon
/// surface with parameters `(m, n)`: the three shortest horizontal
/// saddle-connection lengths, the three smallest cylinder heights, the
/// common modulus of the horizontal cylinders, and their number.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HorizontalGeometry {
    pub l0: f64,
    pub l1: f64,
    pub l2: f64,
    pub h0: f64,
    pub h1: f64,
    pub h2: f64,
    pub modulus: f64,
    /// `(m-1)(n-1)/2`; meaningful when `m` and `n` are not both even.
    pub cylinder_count: usize,
}

pub fn horizontal_geometry(p: BouwMollerParams) -> HorizontalGeometry {
    let (m, n) = (p.m as f64, p.n as f64);
    let l0 = (PI / m).sin();
    let h0 = (PI / n).sin() * l0;
    HorizontalGeometry {
        l0,
        l1: 2.0 * (PI / n).cos() * l0,
        l2: 2.0 * (PI / m).cos() * l0,
        h0,
        h1: 2.0 * (PI / n).cos() * h0,
        h2: 2.0 * (PI / m).cos() * h0,
        modulus: 2.0 * ((PI / n).cos() + (PI / m).cos()) / (PI / n).sin(),
        cylinder_count: ((p.m - 1) * (p.n - 1) / 2) as usize,
    }
}
