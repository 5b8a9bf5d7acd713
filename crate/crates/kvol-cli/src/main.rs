//! Command-line front end binding the library crates into reproducible
//! runs: surface construction and validation, saddle-connection and
//! cylinder listings, planarity checks, and the intersection-volume
//! functional both by brute force and by the orbit closed form.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use surface_model::{
    build_bouw_moller, surface_from_json, surface_to_json, validate_hypotheses, BouwMollerParams,
    TranslationSurface,
};
use trajectory::{decompose, enumerate_saddle_connections, EnumerationConfig, Slope};

/// Exit code signalling a failed certificate (all hypotheses were
/// evaluated, some did not hold), as opposed to a usage or IO error.
const EXIT_CERT_FAILURE: u8 = 2;

#[derive(Parser)]
#[command(name = "kvol-cli", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Source {
    /// Build the two-parameter polygonal surface with parameters m n.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    bouw_moller: Option<Vec<u32>>,
    /// Read a surface description from a JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Source {
    fn params(&self) -> Result<BouwMollerParams> {
        let mn = self
            .bouw_moller
            .as_ref()
            .ok_or_else(|| anyhow!("this subcommand needs --bouw-moller M N"))?;
        Ok(BouwMollerParams::new(mn[0], mn[1])?)
    }

    fn load(&self) -> Result<TranslationSurface> {
        match (&self.bouw_moller, &self.file) {
            (Some(_), None) => Ok(build_bouw_moller(self.params()?)?),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let file = serde_json::from_str(&text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                Ok(surface_from_json(&file)?)
            }
            _ => bail!("exactly one of --bouw-moller and --file is required"),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a surface and write its JSON description.
    Build {
        #[command(flatten)]
        source: Source,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Load a surface file and report its structure and hypotheses.
    Validate { file: PathBuf },
    /// List saddle connections up to a length bound as CSV.
    Saddles {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'L', long, default_value_t = 3.0)]
        length: f64,
    },
    /// Intersection numbers of two closed curves given as
    /// saddle-connection indices from a `saddles` run at the same bound.
    Intersect {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'L', long, default_value_t = 3.0)]
        length: f64,
        /// Comma-separated indices of the first curve.
        #[arg(long)]
        curve_a: String,
        /// Comma-separated indices of the second curve.
        #[arg(long)]
        curve_b: String,
    },
    /// Cylinder decomposition in one periodic direction as CSV.
    Cylinders {
        #[command(flatten)]
        source: Source,
        /// Slope of the direction: a number, or "inf" for horizontal.
        #[arg(long, default_value = "inf")]
        direction: String,
    },
    /// Planarity of the separatrix diagram per direction.
    Planarity {
        #[command(flatten)]
        source: Source,
        /// Directions to test (repeatable).
        #[arg(long, default_value = "inf")]
        direction: Vec<String>,
    },
    /// Brute-force maximization of |Int(α,β)|/(l(α)l(β)) times area.
    Kvol {
        #[command(flatten)]
        source: Source,
        /// Truncation length; defaults to three polygon diameters.
        #[arg(short = 'L', long)]
        length: Option<f64>,
        /// Also evaluate the orbit closed form (two-parameter surfaces
        /// with coprime parameters only) and check consistency.
        #[arg(long)]
        compare_formula: bool,
        /// Emit JSON (the only supported format; kept for scripts).
        #[arg(long)]
        json: bool,
    },
    /// Closed-form functional on a grid of deformed surfaces, as CSV.
    KvolDisk {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = -1.0)]
        x_min: f64,
        #[arg(long, default_value_t = 1.0)]
        x_max: f64,
        #[arg(long, default_value_t = 0.5)]
        y_min: f64,
        #[arg(long, default_value_t = 2.0)]
        y_max: f64,
        #[arg(long, default_value_t = 11)]
        nx: usize,
        #[arg(long, default_value_t = 11)]
        ny: usize,
    },
    /// Evaluate the comparison-domain hypotheses; exits 2 on failure.
    CheckHypotheses {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'L', long, default_value_t = 3.0)]
        length: f64,
    },
}

/// Format with 12 significant digits, round-trippable by a plain
/// float parser.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (11 - x.abs().log10().floor() as i64).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

/// Round to 12 significant digits for JSON output.
fn r12(x: f64) -> f64 {
    sig12(x).parse().unwrap_or(x)
}

fn parse_slope(s: &str) -> Result<Slope> {
    match s {
        "inf" | "infinity" | "Inf" => Ok(Slope::Infinite),
        other => Ok(Slope::Finite(
            other.parse::<f64>().context("slope must be a number or 'inf'")?,
        )),
    }
}

fn slope_str(d: Slope) -> String {
    match d {
        Slope::Infinite => "inf".into(),
        Slope::Finite(v) => sig12(v),
    }
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().context("curve indices must be integers"))
        .collect()
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Build { source, output } => {
            let s = source.load()?;
            let text = serde_json::to_string_pretty(&surface_to_json(&s))?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => println!("{text}"),
            }
            Ok(0)
        }
        Cmd::Validate { file } => {
            let s = Source {
                bouw_moller: None,
                file: Some(file),
            }
            .load()?;
            let rep = validate_hypotheses(&s);
            let out = serde_json::json!({
                "polygons": s.polygons().len(),
                "singularities": s.singularity_count(),
                "cone_angles": s.cone_angles().iter().map(|&a| r12(a)).collect::<Vec<_>>(),
                "genus": s.genus(),
                "area": r12(s.area()),
                "min_side_length": r12(s.min_side_length()),
                "satisfies_p1": rep.satisfies_p1,
                "satisfies_p1prime": rep.satisfies_p1prime,
                "satisfies_p2": rep.satisfies_p2,
                "theta0": r12(rep.theta0),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Cmd::Saddles { source, length } => {
            let s = source.load()?;
            let all = enumerate_saddle_connections(&s, length, &EnumerationConfig::default())?;
            println!("hol_x,hol_y,length,slope,k,p,q,is_odd,is_side,is_diagonal");
            for sc in &all {
                let dec = decompose(&s, sc);
                println!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    sig12(sc.holonomy.x),
                    sig12(sc.holonomy.y),
                    sig12(sc.length()),
                    slope_str(sc.slope()),
                    dec.k(),
                    dec.p,
                    dec.q,
                    dec.is_odd,
                    dec.is_side,
                    dec.is_diagonal,
                );
            }
            Ok(0)
        }
        Cmd::Intersect {
            source,
            length,
            curve_a,
            curve_b,
        } => {
            let s = source.load()?;
            let all = enumerate_saddle_connections(&s, length, &EnumerationConfig::default())?;
            let pick = |spec: &str| -> Result<Vec<_>> {
                parse_indices(spec)?
                    .into_iter()
                    .map(|i| {
                        all.get(i)
                            .cloned()
                            .ok_or_else(|| anyhow!("index {i} out of range ({} found)", all.len()))
                    })
                    .collect()
            };
            let a = pick(&curve_a)?;
            let b = pick(&curve_b)?;
            let rep = intersection::curve_intersection(&s, &a, &b)?;
            println!("{}", serde_json::to_string_pretty(&rep)?);
            Ok(0)
        }
        Cmd::Cylinders { source, direction } => {
            let s = source.load()?;
            let d = parse_slope(&direction)?;
            let dec = periodic::cylinder_decomposition(&s, d)?;
            if !dec.is_periodic {
                bail!("direction {direction} is not periodic at this tolerance");
            }
            println!("direction,width,height,modulus");
            for c in &dec.cylinders {
                println!(
                    "{},{},{},{}",
                    slope_str(d),
                    sig12(c.width),
                    sig12(c.height),
                    sig12(c.modulus()),
                );
            }
            Ok(0)
        }
        Cmd::Planarity { source, direction } => {
            let s = source.load()?;
            for spec in &direction {
                let d = parse_slope(spec)?;
                let g = periodic::separatrix_diagram(&s, d)?;
                let genus: usize = g.component_genera().iter().sum();
                let verdict = if g.is_planar() { "planar" } else { "nonplanar" };
                println!("{} {} genus={}", slope_str(d), verdict, genus);
            }
            Ok(0)
        }
        Cmd::Kvol {
            source,
            length,
            compare_formula,
            json: _,
        } => {
            let s = source.load()?;
            let l = length.unwrap_or_else(|| kvol_engine::default_truncation(&s));
            let mut res = kvol_engine::kvol_bruteforce(&s, l)?;
            if compare_formula {
                let p = source.params()?;
                res.kvol_formula =
                    Some(teich_disk::kvol_disk(&teich_disk::DiskPoint::i(), p)?);
            }
            let maximizers: Vec<_> = res
                .maximizers
                .iter()
                .map(|m| {
                    serde_json::json!({
                        "alpha": {
                            "holonomy": [r12(m.alpha.holonomy.x), r12(m.alpha.holonomy.y)],
                            "length": r12(m.alpha.length()),
                        },
                        "beta": {
                            "holonomy": [r12(m.beta.holonomy.x), r12(m.beta.holonomy.y)],
                            "length": r12(m.beta.length()),
                        },
                        "intersections": m.intersections,
                        "ratio": r12(m.ratio),
                    })
                })
                .collect();
            let out = serde_json::json!({
                "kvol": r12(res.kvol_lower),
                "max_ratio": r12(res.max_ratio),
                "truncation_length": r12(res.truncation_length),
                "sysvol": r12(res.sysvol),
                "systole_length": r12(res.systole_length),
                "kvol_formula": res.kvol_formula.map(r12),
                "maximizers": maximizers,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            if let Some(f) = res.kvol_formula {
                // the truncated maximum can never exceed the true value
                if res.kvol_lower > f * (1.0 + 1e-6) {
                    return Ok(EXIT_CERT_FAILURE);
                }
            }
            Ok(0)
        }
        Cmd::KvolDisk {
            source,
            x_min,
            x_max,
            y_min,
            y_max,
            nx,
            ny,
        } => {
            let p = source.params()?;
            if y_min <= 0.0 || y_max < y_min || x_max < x_min || nx == 0 || ny == 0 {
                bail!("grid must satisfy 0 < y_min <= y_max, x_min <= x_max, nx, ny >= 1");
            }
            println!("x,y,sin_theta_plus,sin_theta_minus,kvol");
            let step = |lo: f64, hi: f64, n: usize, i: usize| {
                if n == 1 {
                    lo
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            };
            for j in 0..ny {
                for i in 0..nx {
                    let x = teich_disk::DiskPoint::new(
                        step(x_min, x_max, nx, i),
                        step(y_min, y_max, ny, j),
                    )?;
                    let (plus, minus) = teich_disk::sin_theta_pm(&x, p)?;
                    println!(
                        "{},{},{},{},{}",
                        sig12(x.x),
                        sig12(x.y),
                        sig12(plus),
                        sig12(minus),
                        sig12(teich_disk::kvol_disk(&x, p)?),
                    );
                }
            }
            Ok(0)
        }
        Cmd::CheckHypotheses { source, length } => {
            let p = source.params()?;
            let s = build_bouw_moller(p)?;
            let all = enumerate_saddle_connections(&s, length, &EnumerationConfig::default())?;
            let mut slopes: Vec<Slope> = Vec::new();
            for sc in all.iter().filter(|sc| sc.is_closed()) {
                let d = sc.slope();
                if !slopes.iter().any(|&e| {
                    (d.key() - e.key()).abs() < 1e-9 * (1.0 + d.key().abs().max(e.key().abs()))
                }) {
                    slopes.push(d);
                }
            }
            let mut pairs = Vec::new();
            for (i, &d) in slopes.iter().enumerate() {
                for &e in &slopes[i + 1..] {
                    pairs.push((d, e));
                }
            }
            let provider = |d: Slope, e: Slope| Ok(teich_disk::k_dd_with(&s, &all, d, e)?.k);
            let mut reports = Vec::new();
            let mut all_pass = true;
            for (i, dom) in teich_disk::standard_domains(p)?.iter().enumerate() {
                let rep = teich_disk::check_big_statement_hypotheses(dom, &pairs, &provider)?;
                all_pass &= rep.h1 && rep.h2 && rep.h3 && rep.h4;
                reports.push(serde_json::json!({
                    "domain": i + 1,
                    "a": r12(dom.a),
                    "b": r12(dom.b),
                    "c": r12(dom.c),
                    "report": rep,
                }));
            }
            println!("{}", serde_json::to_string_pretty(&reports)?);
            Ok(if all_pass { 0 } else { EXIT_CERT_FAILURE })
        }
    }
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("KVOL_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
