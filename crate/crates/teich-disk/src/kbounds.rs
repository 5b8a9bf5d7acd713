//! Intersection constants of pairs of periodic directions and the
//! closed-form evaluation of the intersection-to-length supremum on a
//! deformed surface.

use crate::{slope_eq, theta, DiskPoint, TeichError};
use serde::Serialize;
use std::f64::consts::PI;
use surface_model::{build_bouw_moller, BouwMollerParams, TranslationSurface};
use trajectory::{enumerate_saddle_connections, same_geodesic, EnumerationConfig, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KMethod {
    /// Supremum realized by an enumerated pair of saddle connections.
    ExactByEnumeration,
    /// Upper bound taken from a closed form.
    ClosedFormBound,
}

/// The constant `K(d, d')`: supremum of `Int(α,β)/(α∧β)` over pairs of
/// closed saddle connections with slopes `d` and `d'`. It is symmetric
/// and unchanged when both slopes are moved by an affine symmetry of
/// the surface.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DirectionPairBound {
    pub d: Slope,
    pub d_prime: Slope,
    pub k: f64,
    pub method: KMethod,
}

/// Enumerates all closed saddle connections of length at most `l` in
/// the two slopes and maximizes `|Int(α,β)|` over wedge area. The result
/// is the true supremum whenever the maximizing pair is short enough to
/// be enumerated, which holds for the pairs used by the closed forms.
pub fn k_dd(
    s: &TranslationSurface,
    d: Slope,
    d_prime: Slope,
    l: f64,
) -> Result<DirectionPairBound, TeichError> {
    let all = enumerate_saddle_connections(s, l, &EnumerationConfig::default())?;
    k_dd_with(s, &all, d, d_prime)
}

/// [`k_dd`] over an already-enumerated list of saddle connections, for
/// callers evaluating many pairs on one surface.
pub fn k_dd_with(
    s: &TranslationSurface,
    all: &[trajectory::SaddleConnection],
    d: Slope,
    d_prime: Slope,
) -> Result<DirectionPairBound, TeichError> {
    if slope_eq(d, d_prime) {
        return Err(TeichError::EqualSlopes);
    }
    let pick = |want: Slope| {
        let mut out: Vec<&trajectory::SaddleConnection> = Vec::new();
        for sc in all.iter().filter(|sc| sc.is_closed()) {
            if slope_eq(sc.slope(), want) && !out.iter().any(|o| same_geodesic(s, o, sc)) {
                out.push(sc);
            }
        }
        out
    };
    let alphas = pick(d);
    let betas = pick(d_prime);
    if alphas.is_empty() {
        return Err(TeichError::NonPeriodicSlope(format!("{:?}", d)));
    }
    if betas.is_empty() {
        return Err(TeichError::NonPeriodicSlope(format!("{:?}", d_prime)));
    }
    let mut k: f64 = 0.0;
    for a in &alphas {
        for b in &betas {
            let wedge = a.holonomy.cross(b.holonomy).abs();
            let int = intersection::algebraic_intersection(s, a, b)?.unsigned_abs();
            k = k.max(int as f64 / wedge);
        }
    }
    Ok(DirectionPairBound {
        d,
        d_prime,
        k,
        method: KMethod::ExactByEnumeration,
    })
}

/// The closed-form values and bounds for `K` on the standard surface
/// with parameters `(m, n)`, all in units of `1/l₀²`-scaled constants.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct KClosedForms {
    /// `K(∞, ±cot(π/n)) = 1/(sin(π/n)·l₀²)`, an equality: the global
    /// maximum of `K`, realized by pairs of shortest sides.
    pub adjacent_pair: f64,
    /// Upper bound `1/(2cos(π/n)·sin(π/n)·l₀²)` for the pairs
    /// `(∞, ±cot(2π/n))`.
    pub second_pair_bound: f64,
    /// Upper bound `1/(2cos(π/m)·sin(π/n)·l₀²)` for every pair outside
    /// the two families above and their symmetry images.
    pub generic_bound: f64,
}

pub fn k_closed_forms(p: BouwMollerParams) -> KClosedForms {
    let l0sq = p.l0() * p.l0();
    let sn = (PI / p.n as f64).sin();
    KClosedForms {
        adjacent_pair: 1.0 / (sn * l0sq),
        second_pair_bound: 1.0 / (2.0 * (PI / p.n as f64).cos() * sn * l0sq),
        generic_bound: 1.0 / (2.0 * (PI / p.m as f64).cos() * sn * l0sq),
    }
}

/// The orbit-wide constant `Vol · K(∞, ±cot(π/n)) = Vol/(sin(π/n)·l₀²)`
/// multiplying the angle factor in [`kvol_disk`].
pub fn kvol_constant(p: BouwMollerParams) -> Result<f64, TeichError> {
    if !p.coprime() {
        return Err(TeichError::FormulaNotApplicable(format!(
            "({}, {}) share a factor; only the planarity-based boundedness certificate applies",
            p.m, p.n
        )));
    }
    let s = build_bouw_moller(p)?;
    Ok(s.area() * k_closed_forms(p).adjacent_pair)
}

/// Sines of the angles between the horizontal family and the two
/// adjacent-side families `±cot(π/n)` on the deformed surface at `x`.
pub fn sin_theta_pm(x: &DiskPoint, p: BouwMollerParams) -> Result<(f64, f64), TeichError> {
    let cot = 1.0 / (PI / p.n as f64).tan();
    let plus = theta(x, Slope::Infinite, Slope::Finite(cot))?.sin();
    let minus = theta(x, Slope::Infinite, Slope::Finite(-cot))?.sin();
    Ok((plus, minus))
}

/// Closed form for the intersection-to-length supremum (times the
/// area) on the deformed surface at `x`:
/// `Vol/(sin(π/n)·l₀²) · max(sinθ(x,∞,cot(π/n)), sinθ(x,∞,−cot(π/n)))`
/// after moving `x` into the fundamental domain, where the two slopes
/// `±cot(π/n)` are the maximizing pair; the value is constant along the
/// symmetry orbit. Requires coprime `(m, n)`, where the formula is
/// proved.
pub fn kvol_disk(x: &DiskPoint, p: BouwMollerParams) -> Result<f64, TeichError> {
    let c = kvol_constant(p)?;
    let z = crate::reduce_to_fundamental_domain(x, p)?;
    let (plus, minus) = sin_theta_pm(&z, p)?;
    Ok(c * plus.max(minus))
}
