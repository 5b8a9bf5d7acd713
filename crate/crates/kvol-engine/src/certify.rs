use crate::{kvol_bruteforce, EngineError, MaximizingPair};
use surface_model::{build_bouw_moller, BouwMollerParams};

/// How a pair attaining the `1/l₀²` bound is accounted for by the
/// equality classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaximizerKind {
    /// Two intersecting systoles of length `l₀`, the coprime equality
    /// case.
    SystolePair,
    /// Two diagonals of length `√2·l₀` crossing twice, the equality
    /// case of the square-polygon family with `m ≡ 3 mod 4`.
    DiagonalPair,
}

/// Exhaustive check of the ratio bound `crossings/(l(α)l(β)) ≤ 1/l₀²`
/// on one surface of the two-parameter family.
#[derive(Clone, Debug)]
pub struct MainCertificate {
    pub m: u32,
    pub n: u32,
    pub truncation_length: f64,
    /// `1/l₀²`.
    pub ratio_bound: f64,
    pub max_ratio: f64,
    /// Whether some enumerated pair attains the bound. Expected exactly
    /// when the equality cases allow it: coprime parameters, or the
    /// diagonal family.
    pub bound_attained: bool,
    pub maximizer_kinds: Vec<MaximizerKind>,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn classify(p: BouwMollerParams, pair: &MaximizingPair) -> Option<MaximizerKind> {
    let l0 = p.l0();
    let near = |x: f64, y: f64| (x - y).abs() < 1e-9 * y;
    let systole_pair = p.coprime()
        && pair.intersections == 1
        && near(pair.alpha.length(), l0)
        && near(pair.beta.length(), l0);
    if systole_pair {
        return Some(MaximizerKind::SystolePair);
    }
    let diag_len = 2.0_f64.sqrt() * l0;
    let diagonal_pair = p.n == 4
        && p.m % 4 == 3
        && pair.intersections == 2
        && pair.alpha.is_diagonal()
        && pair.beta.is_diagonal()
        && near(pair.alpha.length(), diag_len)
        && near(pair.beta.length(), diag_len);
    if diagonal_pair {
        return Some(MaximizerKind::DiagonalPair);
    }
    None
}

/// Certifies, by truncated exhaustion, that no pair of closed saddle
/// connections beats `1/l₀²` and that every pair attaining it falls in
/// one of the two allowed equality classes. The certificate fails if
/// the bound is exceeded or an unclassifiable maximizer attains it.
pub fn certify_main_inequality(
    p: BouwMollerParams,
    l: f64,
) -> Result<MainCertificate, EngineError> {
    let s = build_bouw_moller(p)?;
    let res = kvol_bruteforce(&s, l)?;
    let ratio_bound = 1.0 / (p.l0() * p.l0());
    let mut failures = Vec::new();
    if res.max_ratio > ratio_bound * (1.0 + 1e-9) {
        failures.push(format!(
            "ratio {} exceeds the bound {ratio_bound}",
            res.max_ratio
        ));
    }
    let bound_attained = res.max_ratio >= ratio_bound * (1.0 - 1e-9);
    let mut maximizer_kinds = Vec::new();
    if bound_attained {
        for pair in &res.maximizers {
            match classify(p, pair) {
                Some(kind) => maximizer_kinds.push(kind),
                None => failures.push(format!(
                    "unclassifiable maximizer: lengths {:.6} and {:.6}, intersection {}",
                    pair.alpha.length(),
                    pair.beta.length(),
                    pair.intersections
                )),
            }
        }
    }
    let pass = failures.is_empty();
    Ok(MainCertificate {
        m: p.m,
        n: p.n,
        truncation_length: l,
        ratio_bound,
        max_ratio: res.max_ratio,
        bound_attained,
        maximizer_kinds,
        failures,
        pass,
    })
}
