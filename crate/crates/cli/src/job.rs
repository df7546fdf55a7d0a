//! Job configuration: TOML file plus command-line overrides.

use crate::expr;
use crate::CliError;
use clap::Args;
use curvefold::catalog::Builtin;
use curvefold::{Settings, Tolerances};
use serde::Deserialize;
use std::path::{Path, PathBuf};

/// Options shared by the geometry subcommands. Every flag overrides the
/// matching key of `--config`.
#[derive(Args, Debug, Clone, Default)]
pub struct JobArgs {
    /// TOML job file; unknown keys are rejected.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Built-in crease, e.g. `helix`, `torus_curve(3)`, `circle`.
    #[arg(long, value_name = "SPEC")]
    pub example: Option<String>,
    /// Crease sampled as whitespace or comma separated `x y z` rows.
    #[arg(long, value_name = "FILE", conflicts_with = "example")]
    pub curve_file: Option<PathBuf>,
    /// Treat the sampled crease as a closed curve.
    #[arg(long)]
    pub closed: bool,
    /// Parameter interval `a,b` of a built-in crease, e.g. `-0.5,0.5`.
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    pub domain: Option<String>,
    /// First angular function: `const(x)`, `linear(a,b)` for a·t + b, or
    /// `file(path)` with `t alpha` rows.
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Plane generator whose curvature, rescaled to the crease length, is μ.
    #[arg(long, value_name = "SPEC")]
    pub generator: Option<String>,
    /// Arc-length intervals along the crease.
    #[arg(long)]
    pub resolution: Option<usize>,
    /// Band half-width as a fraction of the crease length.
    #[arg(long)]
    pub width_fraction: Option<f64>,
    /// Ruling samples across the band.
    #[arg(long)]
    pub rulings: Option<usize>,
    /// Grid size for the shift b of closed families.
    #[arg(long)]
    pub grid_b: Option<usize>,
    /// Tolerance override `name=value`, repeatable.
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// Output directory; defaults to $CURVEFOLD_OUT, then `.`.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    command: Option<String>,
    example: Option<String>,
    curve_file: Option<PathBuf>,
    closed: Option<bool>,
    domain: Option<String>,
    alpha: Option<String>,
    generator: Option<String>,
    resolution: Option<usize>,
    width_fraction: Option<f64>,
    rulings: Option<usize>,
    grid_b: Option<usize>,
    out: Option<PathBuf>,
    tol: Option<toml::Table>,
}

#[derive(Debug, Clone)]
pub enum CurveSource {
    Example(Builtin),
    File { path: PathBuf, closed: bool },
}

/// Angle as a function of the crease parameter: the native parameter for
/// built-ins, arc length for sampled creases, and centred arc length for
/// `mean-h`.
#[derive(Debug, Clone)]
pub enum AlphaSpec {
    Const(f64),
    Linear(f64, f64),
    Table(Vec<(f64, f64)>),
}

impl AlphaSpec {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            AlphaSpec::Const(c) => *c,
            AlphaSpec::Linear(a, b) => a * t + b,
            AlphaSpec::Table(rows) => {
                let k = rows.partition_point(|r| r.0 <= t).clamp(1, rows.len() - 1);
                let ((t0, a0), (t1, a1)) = (rows[k - 1], rows[k]);
                a0 + (a1 - a0) * (t - t0) / (t1 - t0)
            }
        }
    }

    /// Table range, if any; evaluation outside it extrapolates.
    pub fn range(&self) -> Option<(f64, f64)> {
        match self {
            AlphaSpec::Table(rows) => Some((rows[0].0, rows[rows.len() - 1].0)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Job {
    pub curve: CurveSource,
    pub domain: Option<(f64, f64)>,
    pub alpha: Option<AlphaSpec>,
    pub generator: Option<Builtin>,
    pub settings: Settings,
    pub grid_b: usize,
    pub out: PathBuf,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_domain(text: &str) -> Result<(f64, f64), CliError> {
    let (_, parts) = expr::call(&format!("d({text})")).map_err(bad)?;
    match parts.as_slice() {
        [a, b] => {
            let (a, b) = (expr::number(a).map_err(bad)?, expr::number(b).map_err(bad)?);
            if a < b {
                Ok((a, b))
            } else {
                Err(bad(format!("domain `{text}` is empty")))
            }
        }
        _ => Err(bad(format!("domain `{text}` must be `a,b`"))),
    }
}

/// Numeric rows of a text table, skipping blanks and `#` comments.
pub fn read_table(path: &Path, columns: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|c| !c.is_empty())
            .map(|c| c.parse::<f64>())
            .collect::<Result<Vec<f64>, _>>();
        let cells = match cells {
            Ok(c) => c,
            // a header row is allowed before the first data row
            Err(_) if rows.is_empty() && !header_seen => {
                header_seen = true;
                continue;
            }
            Err(e) => return Err(bad(format!("{}:{}: {e}", path.display(), k + 1))),
        };
        if cells.len() != columns {
            return Err(bad(format!("{}:{}: expected {columns} columns", path.display(), k + 1)));
        }
        rows.push(cells);
    }
    Ok(rows)
}

fn parse_alpha(text: &str) -> Result<AlphaSpec, CliError> {
    let (name, args) = expr::call(text).map_err(bad)?;
    let nums = || args.iter().map(|a| expr::number(a).map_err(bad)).collect::<Result<Vec<_>, _>>();
    match (name.as_str(), args.len()) {
        ("const", 1) => Ok(AlphaSpec::Const(nums()?[0])),
        ("linear", 2) => {
            let v = nums()?;
            Ok(AlphaSpec::Linear(v[0], v[1]))
        }
        ("file", 1) => {
            let mut rows: Vec<(f64, f64)> =
                read_table(Path::new(&args[0]), 2)?.into_iter().map(|r| (r[0], r[1])).collect();
            rows.sort_by(|a, b| a.0.total_cmp(&b.0));
            if rows.len() < 2 || rows.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(bad(format!("{}: need at least two distinct abscissae", args[0])));
            }
            Ok(AlphaSpec::Table(rows))
        }
        _ => Err(bad(format!("alpha `{text}`: expected const(x), linear(a,b) or file(path)"))),
    }
}

fn parse_builtin(text: &str) -> Result<Builtin, CliError> {
    let (name, args) = expr::numeric_call(text).map_err(bad)?;
    Builtin::from_name(&name, &args).map_err(|e| bad(e.to_string()))
}

fn parse_tol(base: Tolerances, file: Option<toml::Table>, flags: &[String]) -> Result<Tolerances, CliError> {
    let mut table = match toml::Table::try_from(base) {
        Ok(t) => t,
        Err(e) => return Err(bad(e.to_string())),
    };
    for (k, v) in file.unwrap_or_default() {
        table.insert(k, v);
    }
    for f in flags {
        let (k, v) = f.split_once('=').ok_or_else(|| bad(format!("--tol `{f}`: expected name=value")))?;
        table.insert(k.trim().to_string(), toml::Value::Float(expr::number(v).map_err(bad)?));
    }
    let tol: Tolerances = table.try_into().map_err(|e: toml::de::Error| bad(format!("tolerances: {}", e.message())))?;
    let values = toml::Table::try_from(tol).map_err(|e| bad(e.to_string()))?;
    if values.values().any(|v| !v.as_float().is_some_and(|x| x > 0.0)) {
        return Err(bad("tolerances must be positive"));
    }
    Ok(tol)
}

impl Job {
    /// Merges the config file (if any) with the flags; flags win.
    pub fn resolve(command: &str, args: &JobArgs) -> Result<Job, CliError> {
        let file = match &args.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| bad(format!("{}: {e}", p.display())))?;
                toml::from_str::<FileConfig>(&text).map_err(|e| bad(format!("{}: {}", p.display(), e.message())))?
            }
            None => FileConfig::default(),
        };
        if let Some(c) = &file.command {
            if c != command {
                return Err(bad(format!("config is for `{c}`, not `{command}`")));
            }
        }
        let curve = match (&args.example, &args.curve_file) {
            (Some(e), _) => CurveSource::Example(parse_builtin(e)?),
            (None, Some(p)) => CurveSource::File { path: p.clone(), closed: args.closed },
            (None, None) => match (&file.example, &file.curve_file) {
                (Some(_), Some(_)) => return Err(bad("config sets both `example` and `curve_file`")),
                (Some(e), None) => CurveSource::Example(parse_builtin(e)?),
                (None, Some(p)) => {
                    CurveSource::File { path: p.clone(), closed: args.closed || file.closed.unwrap_or(false) }
                }
                (None, None) => return Err(bad("no crease given; use --example or --curve-file")),
            },
        };
        let domain = args.domain.as_deref().or(file.domain.as_deref()).map(parse_domain).transpose()?;
        if domain.is_some() && matches!(curve, CurveSource::File { .. }) {
            return Err(bad("--domain applies to built-in creases only"));
        }
        let alpha = args.alpha.as_deref().or(file.alpha.as_deref()).map(parse_alpha).transpose()?;
        let generator = args.generator.as_deref().or(file.generator.as_deref()).map(parse_builtin).transpose()?;
        if let Some(g) = generator {
            if !g.is_plane_curve() {
                return Err(bad(format!("generator `{}` is not a plane curve", g.name())));
            }
        }
        let mut settings = Settings::default();
        if let Some(n) = args.resolution.or(file.resolution) {
            settings.resolution = n;
        }
        if let Some(w) = args.width_fraction.or(file.width_fraction) {
            settings.width_fraction = w;
        }
        if let Some(r) = args.rulings.or(file.rulings) {
            settings.rulings = r;
        }
        settings.tol = parse_tol(settings.tol, file.tol, &args.tol)?;
        if !(16..=1 << 20).contains(&settings.resolution) {
            return Err(bad("resolution must lie in [16, 2^20]"));
        }
        if !(settings.width_fraction > 0.0 && settings.width_fraction < 1.0) {
            return Err(bad("width fraction must lie in (0, 1)"));
        }
        if !(2..=1024).contains(&settings.rulings) {
            return Err(bad("rulings must lie in [2, 1024]"));
        }
        let grid_b = args.grid_b.or(file.grid_b).unwrap_or(8);
        if !(1..=256).contains(&grid_b) {
            return Err(bad("grid_b must lie in [1, 256]"));
        }
        let out = args
            .out
            .clone()
            .or(file.out)
            .or_else(|| std::env::var_os("CURVEFOLD_OUT").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("."));
        Ok(Job { curve, domain, alpha, generator, settings, grid_b, out })
    }

    pub fn require_alpha(&self) -> Result<&AlphaSpec, CliError> {
        self.alpha.as_ref().ok_or_else(|| bad("no first angular function given; use --alpha"))
    }

    /// Short label of the crease for reports.
    pub fn curve_label(&self) -> String {
        match &self.curve {
            CurveSource::Example(b) => b.name().to_string(),
            CurveSource::File { path, .. } => path.display().to_string(),
        }
    }
}
