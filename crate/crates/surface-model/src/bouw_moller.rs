use crate::{build_surface, SideRef, SurfaceError, TranslationSurface};
use geom_core::{semi_regular_polygon, Polygon, Vec2};
use std::f64::consts::PI;

/// Parameters of the semi-regular polygon family `S_{m,n}`.
#[derive(Clone, Copy, Debug)]
pub struct BouwMollerParams {
    pub m: u32,
    pub n: u32,
}

impl BouwMollerParams {
    pub fn new(m: u32, n: u32) -> Result<Self, SurfaceError> {
        if m < 2 || n < 2 || m * n < 6 {
            return Err(SurfaceError::BadParameters(m, n));
        }
        Ok(Self { m, n })
    }

    pub fn gamma(&self) -> u32 {
        gcd(self.m, self.n)
    }

    /// Length of the shortest sides, `sin(pi/m)`.
    pub fn l0(&self) -> f64 {
        (PI / self.m as f64).sin()
    }

    pub fn coprime(&self) -> bool {
        self.gamma() == 1
    }

    /// Cone angle common to all singularities: `2 pi (mn - m - n) / gamma`.
    pub fn cone_angle(&self) -> f64 {
        let (m, n, g) = (self.m as f64, self.n as f64, self.gamma() as f64);
        2.0 * PI * (m * n - m - n) / g
    }

    pub fn genus(&self) -> u32 {
        let (m, n, g) = (self.m, self.n, self.gamma());
        (m * n - m - n - g) / 2 + 1
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Alternating side lengths `(a, b)` of the polygon `P(i)`.
fn side_lengths(m: u32, n: u32, i: u32) -> (f64, f64) {
    let slen = |k: u32| {
        if k % m == 0 {
            0.0
        } else {
            ((k as f64) * PI / (m as f64)).sin()
        }
    };
    let even = slen(i + 1);
    let odd = slen(i);
    if n % 2 == 0 && i % 2 == 1 {
        (odd, even)
    } else {
        (even, odd)
    }
}

/// Direction indices `j in 0..2n` of the sides of `P(i)`, in vertex
/// order: edge `j` points at angle `j pi / n`. Zero-length edges of the
/// degenerate polygons are skipped.
fn direction_indices(n: u32, a: f64, b: f64) -> Vec<u32> {
    (0..2 * n)
        .filter(|j| if j % 2 == 0 { a > 0.0 } else { b > 0.0 })
        .collect()
}

/// Whether the side of `P(i)` with direction index `j` is glued upward
/// (to `P(i+1)`); otherwise it is glued to `P(i-1)`. Parallel sides of
/// neighbouring polygons pair direction `j` with direction `j+n`, and
/// adjacent sides alternate between the two neighbours.
fn glues_up(n: u32, i: u32, j: u32) -> bool {
    if n % 2 == 1 {
        j % 2 == 0
    } else {
        (j % 2 == 0) == (i % 2 == 0)
    }
}

/// Build the translation surface glued from the `m` semi-regular
/// polygons `P(0), ..., P(m-1)`. `P(0)` and `P(m-1)` are regular
/// `n`-gons; the first side of `P(0)` is horizontal.
pub fn build_bouw_moller(params: BouwMollerParams) -> Result<TranslationSurface, SurfaceError> {
    let (m, n) = (params.m, params.n);
    let mut polygons: Vec<Polygon> = Vec::with_capacity(m as usize);
    let mut dirs: Vec<Vec<u32>> = Vec::with_capacity(m as usize);
    let mut x_offset = 0.0;
    for i in 0..m {
        let (a, b) = side_lengths(m, n, i);
        let poly = semi_regular_polygon(n, a, b)?;
        // deterministic disjoint placement along the x-axis
        let min_x = poly
            .vertices()
            .iter()
            .map(|v| v.x)
            .fold(f64::INFINITY, f64::min);
        let max_x = poly
            .vertices()
            .iter()
            .map(|v| v.x)
            .fold(f64::NEG_INFINITY, f64::max);
        let placed = poly.translated(Vec2::new(x_offset - min_x, 0.0));
        x_offset += max_x - min_x + 1.0;
        dirs.push(direction_indices(n, a, b));
        polygons.push(placed);
    }

    let side_with_dir = |i: u32, j: u32| -> SideRef {
        let s = dirs[i as usize]
            .iter()
            .position(|&d| d == j % (2 * n))
            .expect("parallel side exists in neighbour");
        SideRef::new(i as usize, s)
    };

    let mut pairs = Vec::new();
    for i in 0..m {
        for (s, &j) in dirs[i as usize].iter().enumerate() {
            if glues_up(n, i, j) {
                debug_assert!(i + 1 < m, "top polygon has no upward sides");
                pairs.push((SideRef::new(i as usize, s), side_with_dir(i + 1, j + n)));
            } else {
                debug_assert!(i > 0, "bottom polygon has no downward sides");
            }
        }
    }

    build_surface(polygons, &pairs)
}
