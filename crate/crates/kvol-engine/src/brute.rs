use crate::EngineError;
use rayon::prelude::*;
use surface_model::TranslationSurface;
use trajectory::{
    enumerate_saddle_connections, same_geodesic, systoles, EnumerationConfig, SaddleConnection,
};

/// A pair of closed saddle connections realizing the maximal
/// intersection-over-lengths ratio seen at the truncation length.
#[derive(Clone, Debug)]
pub struct MaximizingPair {
    pub alpha: SaddleConnection,
    pub beta: SaddleConnection,
    /// `|Int(α,β)|`, the absolute algebraic intersection number.
    pub intersections: usize,
    pub ratio: f64,
}

/// Outcome of the truncated maximization.
#[derive(Clone, Debug)]
pub struct KvolResult {
    /// Area times the best ratio found: a lower bound for the true
    /// supremum, exact whenever the maximizing pair is enumerated.
    pub kvol_lower: f64,
    /// Best `|Int(α,β)|/(l(α)·l(β))` over the enumerated pairs.
    pub max_ratio: f64,
    pub truncation_length: f64,
    /// All pairs within relative `1e-9` of the best ratio, in
    /// lexicographic enumeration order.
    pub maximizers: Vec<MaximizingPair>,
    /// Area over squared systole length.
    pub sysvol: f64,
    /// Length of the shortest closed saddle connection. Every closed
    /// saddle connection has nonzero holonomy, and holonomy is a
    /// homomorphism on homology, so these loops are never trivial in
    /// homology and the shortest one realizes the homological systole.
    pub systole_length: f64,
    /// Closed form for the same quantity when one is known; filled by
    /// callers with access to the orbit formula.
    pub kvol_formula: Option<f64>,
}

/// Length budget heuristic: three diameters. The known maximizing
/// pairs (systoles and short diagonals) are far shorter, so the budget
/// leaves a wide margin; the result records it so callers can
/// escalate.
pub fn default_truncation(s: &TranslationSurface) -> f64 {
    3.0 * s.max_polygon_diameter()
}

/// Area over squared homological systole length.
pub fn sysvol(s: &TranslationSurface) -> Result<f64, EngineError> {
    let sys = systoles(s, &EnumerationConfig::default())?;
    let l = sys[0].length();
    Ok(s.area() / (l * l))
}

/// Maximizes `|Int(α,β)|/(l(α)·l(β))` over all unordered pairs of
/// distinct closed saddle connections of length at most `l`, where
/// `Int` is the algebraic intersection number, and multiplies by the
/// area. Requires `l` to be at least twice the systole length so that
/// at least the systole pairs are inspected.
pub fn kvol_bruteforce(s: &TranslationSurface, l: f64) -> Result<KvolResult, EngineError> {
    let sys = systoles(s, &EnumerationConfig::default())?;
    let systole_length = sys[0].length();
    if l < 2.0 * systole_length {
        return Err(EngineError::Precondition(format!(
            "truncation {l} is below twice the systole length {systole_length}"
        )));
    }
    let all = enumerate_saddle_connections(s, l, &EnumerationConfig::default())?;
    // one representative per unoriented closed geodesic
    let mut curves: Vec<SaddleConnection> = Vec::new();
    for sc in all.into_iter().filter(|sc| sc.is_closed()) {
        if !curves.iter().any(|c| same_geodesic(s, c, &sc)) {
            curves.push(sc);
        }
    }
    let per_row: Vec<(f64, Vec<(usize, usize, usize, f64)>)> = (0..curves.len())
        .into_par_iter()
        .map(|i| {
            let mut best = 0.0_f64;
            let mut rows = Vec::new();
            for j in i + 1..curves.len() {
                let (a, b) = (&curves[i], &curves[j]);
                let int = intersection::algebraic_intersection(s, a, b)?.unsigned_abs() as usize;
                if int == 0 {
                    continue;
                }
                let ratio = int as f64 / (a.length() * b.length());
                if ratio > best * (1.0 - 1e-9) {
                    best = best.max(ratio);
                    rows.push((i, j, int, ratio));
                }
            }
            Ok((best, rows))
        })
        .collect::<Result<_, EngineError>>()?;
    let max_ratio = per_row.iter().map(|r| r.0).fold(0.0_f64, f64::max);
    let maximizers: Vec<MaximizingPair> = per_row
        .iter()
        .flat_map(|(_, rows)| rows.iter())
        .filter(|&&(_, _, _, ratio)| ratio >= max_ratio * (1.0 - 1e-9))
        .map(|&(i, j, intersections, ratio)| MaximizingPair {
            alpha: curves[i].clone(),
            beta: curves[j].clone(),
            intersections,
            ratio,
        })
        .collect();
    Ok(KvolResult {
        kvol_lower: s.area() * max_ratio,
        max_ratio,
        truncation_length: l,
        maximizers,
        sysvol: s.area() / (systole_length * systole_length),
        systole_length,
        kvol_formula: None,
    })
}
