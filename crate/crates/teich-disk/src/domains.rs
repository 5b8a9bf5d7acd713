//! The fundamental domain of the orbit, its four comparison subdomains,
//! and the numeric checks behind the comparison theorem.

use crate::{mobius, slope_eq, theta, DiskPoint, TeichError};
use geom_core::Mat2;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_4, PI};
use surface_model::BouwMollerParams;
use trajectory::Slope;

/// Shape constants of the fundamental domain of the deformation orbit:
/// the vertical walls at `±s/2`, the two bottom circles of radius `r`
/// centered at `±x_c`, and the corner point where wall and circle meet.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FundamentalDomainData {
    pub m: u32,
    pub n: u32,
    /// Center of each bottom circle, `cot(π/n)`.
    pub x_c: f64,
    /// Radius of each bottom circle, `1/sin(π/n)`; `x_c² + 1 = r²`.
    pub r: f64,
    /// Width of the domain: the common cylinder modulus
    /// `2(cos(π/n) + cos(π/m))/sin(π/n)`.
    pub s: f64,
    /// Right corner `s/2 + i·sin(π/m)/sin(π/n)`, the point of the
    /// parameter-swapped surface; the left corner is its mirror.
    pub corner: DiskPoint,
}

pub fn fundamental_domain(p: BouwMollerParams) -> FundamentalDomainData {
    let (am, an) = (PI / p.m as f64, PI / p.n as f64);
    let s = 2.0 * (an.cos() + am.cos()) / an.sin();
    FundamentalDomainData {
        m: p.m,
        n: p.n,
        x_c: an.cos() / an.sin(),
        r: 1.0 / an.sin(),
        s,
        corner: DiskPoint {
            x: s / 2.0,
            y: am.sin() / an.sin(),
        },
    }
}

/// Moves a point to the representative of its symmetry orbit inside the
/// fundamental domain: the strip `|x| ≤ s/2` above the two bottom
/// circles. The walk alternates the translation by `s` with the
/// order-`n` elliptic fixing `i`; the isometric circles of the elliptic
/// and its inverse are exactly the bottom circles, so every elliptic
/// step taken strictly below them increases the imaginary part, and by
/// discreteness the walk settles in finitely many steps.
pub fn reduce_to_fundamental_domain(
    x: &DiskPoint,
    p: BouwMollerParams,
) -> Result<DiskPoint, TeichError> {
    let fd = fundamental_domain(p);
    let e = Mat2::rotation(PI / p.n as f64);
    let e_inv = Mat2::rotation(-PI / p.n as f64);
    let r2 = fd.r * fd.r;
    let mut z = *x;
    for _ in 0..100_000 {
        let k = (z.x / fd.s).round();
        if k != 0.0 {
            z = DiskPoint::new(z.x - k * fd.s, z.y)?;
        }
        let left = (z.x + fd.x_c) * (z.x + fd.x_c) + z.y * z.y;
        let right = (z.x - fd.x_c) * (z.x - fd.x_c) + z.y * z.y;
        if left >= r2 * (1.0 - 1e-12) && right >= r2 * (1.0 - 1e-12) {
            return Ok(z);
        }
        z = mobius(if left < right { &e } else { &e_inv }, &z)?;
    }
    Err(TeichError::Precondition(format!(
        "orbit reduction did not settle from ({}, {})",
        x.x, x.y
    )))
}

/// Domain of the comparison theorem: the region between the vertical
/// geodesics over `a` and `a + b`, above the circle geodesic with
/// endpoints `a ± c`, with its corner point `X₀` on the vertical over
/// `a + b`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComparisonDomain {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Intersection of the vertical over `a + b` with the circle:
    /// `(a + b, √(c² − b²))`.
    pub x0: DiskPoint,
    /// Angle between the two geodesics through `x0`; of the form `π/k`
    /// when the reflections in them generate a dihedral group.
    pub wedge: f64,
}

impl ComparisonDomain {
    pub fn new(a: f64, b: f64, c: f64) -> Result<ComparisonDomain, TeichError> {
        if !(b != 0.0 && b.abs() < c) {
            return Err(TeichError::BadDomain(format!(
                "need 0 < |b| < c, got b = {b}, c = {c}"
            )));
        }
        Ok(ComparisonDomain {
            a,
            b,
            c,
            x0: DiskPoint {
                x: a + b,
                y: (c * c - b * b).sqrt(),
            },
            wedge: (b.abs() / c).acos(),
        })
    }

    pub fn x_range(&self) -> (f64, f64) {
        if self.b > 0.0 {
            (self.a, self.a + self.b)
        } else {
            (self.a + self.b, self.a)
        }
    }

    /// Height of the bottom circle over `x`, zero outside its span.
    pub fn floor(&self, x: f64) -> f64 {
        let dx = x - self.a;
        (self.c * self.c - dx * dx).max(0.0).sqrt()
    }

    pub fn contains(&self, z: &DiskPoint) -> bool {
        let (lo, hi) = self.x_range();
        z.x >= lo - 1e-12 && z.x <= hi + 1e-12 && z.y >= self.floor(z.x) - 1e-12
    }

    fn mirrored(&self) -> ComparisonDomain {
        ComparisonDomain {
            a: self.a,
            b: -self.b,
            c: self.c,
            x0: DiskPoint {
                x: self.a - self.b,
                y: self.x0.y,
            },
            wedge: self.wedge,
        }
    }
}

/// The four comparison domains tiling the fundamental domain, left to
/// right: outer-left, inner-left, inner-right, outer-right. All share
/// the bottom-circle radius `1/sin(π/n)`; the corner of the two inner
/// domains is the base point `i`, the corner of the outer ones is the
/// parameter-swapped surface at `∓s/2`.
pub fn standard_domains(p: BouwMollerParams) -> Result<[ComparisonDomain; 4], TeichError> {
    let (am, an) = (PI / p.m as f64, PI / p.n as f64);
    let x_c = an.cos() / an.sin();
    let r = 1.0 / an.sin();
    let w = am.cos() / an.sin();
    Ok([
        ComparisonDomain::new(-x_c, -w, r)?,
        ComparisonDomain::new(-x_c, x_c, r)?,
        ComparisonDomain::new(x_c, -x_c, r)?,
        ComparisonDomain::new(x_c, w, r)?,
    ])
}

/// Whether the geodesic with boundary points `d`, `d2` meets the open
/// interior of the domain.
pub fn geodesic_meets_interior(dom: &ComparisonDomain, d: Slope, d2: Slope) -> bool {
    let (lo, hi) = dom.x_range();
    let eps = 1e-9 * (1.0 + hi.abs().max(lo.abs()));
    match (d, d2) {
        (Slope::Infinite, Slope::Infinite) => false,
        (Slope::Infinite, Slope::Finite(v)) | (Slope::Finite(v), Slope::Infinite) => {
            // a vertical line runs up to ∞, so only the strip matters
            v > lo + eps && v < hi - eps
        }
        (Slope::Finite(p0), Slope::Finite(q0)) => {
            let (p, q) = if p0 < q0 { (p0, q0) } else { (q0, p0) };
            let (x_lo, x_hi) = (p.max(lo), q.min(hi));
            if x_lo >= x_hi - eps {
                return false;
            }
            // squared distance from the circle center (a, 0) to the arc
            // point over x is linear in x, so it peaks at an endpoint
            let ctr = (p + q) / 2.0;
            let rad = (q - p) / 2.0;
            let f = |x: f64| (x - dom.a).powi(2) + rad * rad - (x - ctr).powi(2);
            let csq = dom.c * dom.c;
            f(x_lo).max(f(x_hi)) > csq + 1e-9 * csq
        }
    }
}

/// Outcome of the hypothesis checks of the comparison theorem over a
/// supplied list of direction pairs.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    /// `K(d,d')·sinθ(X₀,d,d') ≤ K(∞,a)·sinθ(X₀,∞,a)` for all pairs.
    pub h1: bool,
    /// `K(d,d') ≤ K(∞,a)` for all pairs.
    pub h2: bool,
    /// `K(d,d') ≤ sin(π/4)·K(∞,a)` for pairs crossing the interior,
    /// other than `(∞, a)` itself.
    pub h3: bool,
    /// `K(d,d') ≤ ratio·K(∞,a)` for the same pairs, with
    /// `ratio = sinθ(X₀,∞,a)/sinθ(X₀,a,a+2b)`.
    pub h4: bool,
    /// `θ(X₀,∞,a) ≥ π/4`; together with the third check it implies the
    /// first and fourth.
    pub h_star: bool,
    pub theta0: f64,
    pub h4_ratio: f64,
    pub k_inf_a: f64,
    pub failures: Vec<String>,
}

/// Evaluates the four hypotheses (and the `π/4` shortcut) of the
/// comparison theorem on a domain, over a caller-supplied list of
/// periodic direction pairs and a provider for `K`.
pub fn check_big_statement_hypotheses(
    dom: &ComparisonDomain,
    pairs: &[(Slope, Slope)],
    k: &dyn Fn(Slope, Slope) -> Result<f64, TeichError>,
) -> Result<HypothesisReport, TeichError> {
    let a = Slope::Finite(dom.a);
    let k_inf_a = k(Slope::Infinite, a)?;
    let theta0 = theta(&dom.x0, Slope::Infinite, a)?;
    let base = k_inf_a * theta0.sin();
    let h4_ratio = theta0.sin() / theta(&dom.x0, a, Slope::Finite(dom.a + 2.0 * dom.b))?.sin();
    let slack = 1.0 + 1e-9;
    let mut rep = HypothesisReport {
        h1: true,
        h2: true,
        h3: true,
        h4: true,
        h_star: theta0 >= FRAC_PI_4 - 1e-9,
        theta0,
        h4_ratio,
        k_inf_a,
        failures: Vec::new(),
    };
    for &(d, d2) in pairs {
        if slope_eq(d, d2) {
            continue;
        }
        let kv = k(d, d2)?;
        if kv * theta(&dom.x0, d, d2)?.sin() > base * slack {
            rep.h1 = false;
            rep.failures.push(format!("H1 at ({:?}, {:?})", d, d2));
        }
        if kv > k_inf_a * slack {
            rep.h2 = false;
            rep.failures.push(format!("H2 at ({:?}, {:?})", d, d2));
        }
        let is_wall_pair = (slope_eq(d, Slope::Infinite) && slope_eq(d2, a))
            || (slope_eq(d2, Slope::Infinite) && slope_eq(d, a));
        if !is_wall_pair && geodesic_meets_interior(dom, d, d2) {
            if kv > FRAC_PI_4.sin() * k_inf_a * slack {
                rep.h3 = false;
                rep.failures.push(format!("H3 at ({:?}, {:?})", d, d2));
            }
            if kv > h4_ratio * k_inf_a * slack {
                rep.h4 = false;
                rep.failures.push(format!("H4 at ({:?}, {:?})", d, d2));
            }
        }
    }
    Ok(rep)
}

/// Result of minimizing `F(X) = sinθ(X,∞,a)/sinθ(X,d,d')` over a grid
/// in the domain.
#[derive(Clone, Debug, Serialize)]
pub struct SinusComparisonReport {
    pub minimum: f64,
    pub argmin: DiskPoint,
    /// `F(X₀)`, the claimed minimum.
    pub reference: f64,
    /// `minimum − reference`; the claim holds when this is not
    /// significantly negative.
    pub margin: f64,
    pub samples: usize,
    pub minimal_at_corner: bool,
}

fn mirror_slope(a: f64, d: Slope) -> Slope {
    match d {
        Slope::Infinite => Slope::Infinite,
        Slope::Finite(v) => Slope::Finite(2.0 * a - v),
    }
}

/// Checks numerically that `F(X) = sinθ(X,∞,a)/sinθ(X,d,d')` attains
/// its minimum over the domain at the corner `X₀`, on a `samples ×
/// samples` grid clipped at height 10 (the ratio only grows further up
/// the cusp). Requires the ordering `a ≤ d ≤ a+b ≤ d'` (mirrored when
/// `b < 0`) and that the geodesic of the pair meets the domain.
pub fn sinus_comparison_minimum(
    dom: &ComparisonDomain,
    d: Slope,
    d2: Slope,
    samples: usize,
) -> Result<SinusComparisonReport, TeichError> {
    if dom.b < 0.0 {
        let mut rep = sinus_comparison_minimum(
            &dom.mirrored(),
            mirror_slope(dom.a, d),
            mirror_slope(dom.a, d2),
            samples,
        )?;
        rep.argmin.x = 2.0 * dom.a - rep.argmin.x;
        return Ok(rep);
    }
    if slope_eq(d, d2) {
        return Err(TeichError::EqualSlopes);
    }
    let eps = 1e-9 * (1.0 + dom.a.abs() + dom.b.abs());
    let (kd, kd2) = (d.key(), d2.key());
    if !(kd >= dom.a - eps && kd <= dom.a + dom.b + eps && kd2 >= dom.a + dom.b - eps) {
        return Err(TeichError::Precondition(format!(
            "need {} ≤ {} ≤ {} ≤ {}",
            dom.a,
            kd,
            dom.a + dom.b,
            kd2
        )));
    }
    if samples < 2 {
        return Err(TeichError::Precondition("need at least 2 samples".into()));
    }
    let a_slope = Slope::Finite(dom.a);
    let f = |z: &DiskPoint| -> Result<f64, TeichError> {
        Ok(theta(z, Slope::Infinite, a_slope)?.sin() / theta(z, d, d2)?.sin())
    };
    let reference = f(&dom.x0)?;
    let (lo, hi) = dom.x_range();
    let y_top = 10.0_f64;
    let columns: Result<Vec<(f64, DiskPoint)>, TeichError> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let x = lo + (i as f64 + 0.5) / samples as f64 * (hi - lo);
            let y0 = dom.floor(x);
            let mut best = (f64::INFINITY, DiskPoint { x, y: y0.max(1e-9) });
            for j in 0..samples {
                let y = y0 + (j as f64 + 0.5) / samples as f64 * (y_top - y0);
                let z = DiskPoint { x, y };
                let v = f(&z)?;
                if v < best.0 {
                    best = (v, z);
                }
            }
            Ok(best)
        })
        .collect();
    let (minimum, argmin) = columns?
        .into_iter()
        .min_by(|p, q| p.0.total_cmp(&q.0))
        .expect("at least one grid column");
    let margin = minimum - reference;
    Ok(SinusComparisonReport {
        minimum,
        argmin,
        reference,
        margin,
        samples,
        minimal_at_corner: margin >= -1e-6,
    })
}
