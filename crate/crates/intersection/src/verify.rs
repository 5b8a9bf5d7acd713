use crate::{intersection_report, IntersectionError};
use rayon::prelude::*;
use serde::Serialize;
use surface_model::TranslationSurface;
use trajectory::SaddleConnection;

/// Outcome of checking `Int(a, b) <= l(a) l(b) / l0^2` over a family of
/// saddle connections.
#[derive(Clone, Debug, Serialize)]
pub struct MainInequalityReport {
    pub l0: f64,
    /// `1 / l0^2`, the bound on `Int / (l l)`.
    pub bound: f64,
    pub pairs_checked: usize,
    pub max_ratio: f64,
    /// Index pairs violating the bound beyond tolerance.
    pub violations: Vec<(usize, usize)>,
    /// Index pairs realizing the bound within tolerance.
    pub achievers: Vec<(usize, usize)>,
}

impl MainInequalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the intersection-to-length-product bound over all unordered
/// pairs from `scs`, using the total (geometric) crossing count.
pub fn verify_main_inequality(
    s: &TranslationSurface,
    scs: &[SaddleConnection],
) -> Result<MainInequalityReport, IntersectionError> {
    let l0 = s.min_side_length();
    let bound = 1.0 / (l0 * l0);
    let rows: Result<Vec<Vec<(usize, usize, f64)>>, IntersectionError> = (0..scs.len())
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for j in (i + 1)..scs.len() {
                let rep = intersection_report(s, &scs[i], &scs[j])?;
                let ratio = rep.geometric as f64 / (scs[i].length() * scs[j].length());
                row.push((i, j, ratio));
            }
            Ok(row)
        })
        .collect();
    let mut pairs_checked = 0;
    let mut max_ratio = 0.0f64;
    let mut violations = Vec::new();
    let mut achievers = Vec::new();
    for (i, j, ratio) in rows?.into_iter().flatten() {
        pairs_checked += 1;
        max_ratio = max_ratio.max(ratio);
        if ratio > bound * (1.0 + 1e-9) {
            violations.push((i, j));
        } else if ratio > bound * (1.0 - 1e-9) {
            achievers.push((i, j));
        }
    }
    Ok(MainInequalityReport {
        l0,
        bound,
        pairs_checked,
        max_ratio,
        violations,
        achievers,
    })
}
