//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! and domain errors, 3 when the catalog cannot be loaded or the output
//! cannot be written.

use crate::catalog::{table_view, Catalog};
use crate::error::Error;
use crate::geometry::weierstrass;
use crate::num::{parse_rational, rational_to_f64, Rational, Ring};
use crate::poisson::{closed_form_ambient, closed_form_xx, eta_series, sklyanin, CoordinateFunction};
use crate::suites::{self, relative, Suite, SuiteConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LOAD: i32 = 3;

/// Relative tolerance between a bracket and its closed form.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(name = "lie-double", version, about = "Lie bialgebras, Drinfel'd doubles and the Sklyanin bracket on SO(2,2)")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Catalog file replacing the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    pub catalog: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Float,
    Series,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite: all, algebra, double, geometry or poisson.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Show a catalog entry next to the table computed from its sources.
    Table { id: String },
    /// Evaluate a bracket `{f,g}` at a point.
    Poisson {
        /// Two coordinate functions, e.g. `x0,x1` or `w3,w0`.
        pair: String,
        #[command(flatten)]
        at: PointArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        eta: String,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Exact eta-series coefficients of `{f,g}` at a rational point with θ = 0.
    Series {
        pair: String,
        #[command(flatten)]
        at: PointArgs,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// List catalog entries.
    List,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// `x0,x1,x2` (θ = 0) or `x0,x1,x2,th0,th1,th2`.
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    pub point: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub xi: String,
}

enum Failure {
    Usage(String),
    Load(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Load(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    passed: bool,
    warnings: Vec<String>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = execute(&cli);
    match result {
        Ok(out) => {
            for w in &out.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(out.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    EXIT_LOAD
                }
                Ok(()) if out.passed => EXIT_PASS,
                Ok(()) => EXIT_CHECK_FAILURE,
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Load(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_LOAD
        }
    }
}

fn load(global: &Global) -> Result<Catalog, Failure> {
    match &global.catalog {
        Some(p) => Catalog::load(p).map_err(|e| Failure::Load(e.to_string())),
        None => Ok(Catalog::builtin()),
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.global.format;
    match &cli.command {
        Command::Verify { suite, seed, samples } => {
            let cat = load(&cli.global)?;
            let report = suites::run(&cat, *suite, &SuiteConfig { seed: *seed, samples: *samples });
            let text = match fmt {
                Format::Text => report.to_text(),
                Format::JsonLines => report.to_json_lines(),
            };
            Ok(Output {
                text,
                passed: report.passed(),
                warnings: report.warnings.clone(),
            })
        }
        Command::Table { id } => {
            let cat = load(&cli.global)?;
            let view = table_view(&cat, id)?;
            let text = match fmt {
                Format::Text => view.to_text(),
                Format::JsonLines => json_line(&view),
            };
            Ok(Output {
                text,
                passed: view.passed(),
                warnings: vec![],
            })
        }
        Command::List => {
            let cat = load(&cli.global)?;
            let mut text = String::new();
            for e in cat.entries() {
                match fmt {
                    Format::Text => text.push_str(&format!("{:<22} {:<15} {}\n", e.id, e.kind.to_string(), e.anchor)),
                    Format::JsonLines => {
                        text.push_str(&json_line(&json!({"id": e.id, "kind": e.kind.to_string(), "anchor": e.anchor})))
                    }
                }
            }
            Ok(Output {
                text,
                passed: true,
                warnings: vec![],
            })
        }
        Command::Poisson {
            pair,
            at,
            eta,
            mode: Mode::Float,
            ..
        } => {
            let (f, g) = parse_pair(pair)?;
            let coords = float_point(&at.point)?;
            let eta = parse_float("--eta", eta)?;
            let xi = parse_float("--xi", &at.xi)?;
            poisson_float(&f, &g, &coords, eta, xi, fmt)
        }
        Command::Poisson {
            pair,
            at,
            mode: Mode::Series,
            order,
            ..
        }
        | Command::Series { pair, at, order } => {
            let (f, g) = parse_pair(pair)?;
            let x = rational_point(&at.point)?;
            let xi = parse_rational(&at.xi).ok_or_else(|| Failure::Usage(format!("--xi: `{}` is not a rational number", at.xi)))?;
            series(&f, &g, &x, &xi, *order, fmt)
        }
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output serializes");
    s.push('\n');
    s
}

fn parse_pair(s: &str) -> Result<(CoordinateFunction, CoordinateFunction), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((a.parse()?, b.parse()?)),
        _ => Err(Failure::Usage(format!("pair `{s}` must be two functions separated by a comma"))),
    }
}

fn parse_float(flag: &str, s: &str) -> Result<f64, Failure> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Failure::Usage(format!("{flag}: `{s}` is not a finite number"))),
    }
}

fn split_point(s: &str) -> Result<Vec<&str>, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() == 3 || parts.len() == 6 {
        Ok(parts)
    } else {
        Err(Failure::Usage(format!("--point needs 3 or 6 comma-separated values, got {}", parts.len())))
    }
}

fn float_point(s: &str) -> Result<[f64; 6], Failure> {
    let mut c = [0.0; 6];
    for (k, p) in split_point(s)?.into_iter().enumerate() {
        c[k] = parse_float("--point", p)?;
    }
    Ok(c)
}

fn rational_point(s: &str) -> Result<[Rational; 3], Failure> {
    let parts = split_point(s)?;
    let q: Vec<Rational> = parts
        .iter()
        .map(|p| parse_rational(p).ok_or_else(|| Failure::Usage(format!("--point: `{p}` is not a rational number"))))
        .collect::<Result<_, _>>()?;
    if q[3..].iter().any(|t| !t.is_zero()) {
        return Err(Failure::Usage("domain error: exact series are taken at th0 = th1 = th2 = 0".into()));
    }
    Ok([q[0].clone(), q[1].clone(), q[2].clone()])
}

/// Closed form of `{f, g}` when the pair has one.
fn closed_form(f: &CoordinateFunction, g: &CoordinateFunction, x: &[f64; 3], eta: f64, xi: f64) -> Option<Result<f64, Error>> {
    use CoordinateFunction::*;
    let slot = |i: usize, j: usize| match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        _ => 2,
    };
    let sign = |i: usize, j: usize| if i < j { 1.0 } else { -1.0 };
    match (f, g) {
        _ if f == g => Some(Ok(0.0)),
        (W3 | Casimir | CasimirPrime, _) | (_, W3 | Casimir | CasimirPrime) => Some(Ok(0.0)),
        (X(i), X(j)) => Some(closed_form_xx(x, &eta, &xi).map(|v| sign(*i, *j) * v[slot(*i, *j)])),
        (W(i), W(j)) => Some(closed_form_ambient(&weierstrass(x, &eta), &eta, &xi).map(|v| sign(*i, *j) * v[slot(*i, *j)])),
        _ => None,
    }
}

fn poisson_float(
    f: &CoordinateFunction,
    g: &CoordinateFunction,
    coords: &[f64; 6],
    eta: f64,
    xi: f64,
    fmt: Format,
) -> Result<Output, Failure> {
    let value = sklyanin(f, g, coords, &eta, &xi).map_err(|e| Failure::Usage(format!("domain error: {e}")))?;
    let x = [coords[0], coords[1], coords[2]];
    let closed = closed_form(f, g, &x, eta, xi)
        .transpose()
        .map_err(|e| Failure::Usage(format!("domain error: {e}")))?;
    let diff = closed.map(|c| relative(value, c));
    let passed = diff.is_none_or(|d| d <= CLOSED_FORM_TOLERANCE);
    let text = match fmt {
        Format::Text => {
            let mut t = format!("{{{f}, {g}}} at {coords:?}, eta = {eta}, xi = {xi}\nsklyanin     {value:.15e}\n");
            match (closed, diff) {
                (Some(c), Some(d)) => t.push_str(&format!("closed form  {c:.15e}\nrelative     {d:.3e}\n")),
                _ => t.push_str("closed form  none\n"),
            }
            t
        }
        Format::JsonLines => json_line(&json!({
            "pair": [f.to_string(), g.to_string()],
            "point": coords,
            "eta": eta,
            "xi": xi,
            "sklyanin": value,
            "closed_form": closed,
            "relative_difference": diff,
            "status": if passed { "pass" } else { "fail" },
        })),
    };
    Ok(Output {
        text,
        passed,
        warnings: vec![],
    })
}

fn series(
    f: &CoordinateFunction,
    g: &CoordinateFunction,
    x: &[Rational; 3],
    xi: &Rational,
    order: usize,
    fmt: Format,
) -> Result<Output, Failure> {
    let coeffs = eta_series(f, g, x, xi, order)?;
    // Reference expansions stop at eta^2.
    let reference: Option<Vec<Rational>> = match (f, g) {
        (CoordinateFunction::X(i), CoordinateFunction::X(j)) if i != j => {
            let slot = match (i.min(j), i.max(j)) {
                (0, 1) => 0,
                (0, 2) => 1,
                _ => 2,
            };
            let p = &suites::reference_expansion(x, xi)[slot];
            Some(p.iter().map(|c| if i < j { c.clone() } else { -c.clone() }).take(order + 1).collect())
        }
        _ => None,
    };
    let passed = reference.as_ref().is_none_or(|p| p.iter().zip(&coeffs).all(|(a, b)| a == b));
    let text = match fmt {
        Format::Text => {
            let mut t = format!("{{{f}, {g}}} at x = ({}, {}, {}), th = 0, xi = {xi}\n", x[0], x[1], x[2]);
            for (k, c) in coeffs.iter().enumerate() {
                let check = match reference.as_ref().and_then(|p| p.get(k)) {
                    Some(p) if p == c => "  matches reference".to_string(),
                    Some(p) => format!("  reference {p}"),
                    None => String::new(),
                };
                t.push_str(&format!("eta^{k}  {c}  ({:.12e}){check}\n", rational_to_f64(c)));
            }
            t
        }
        Format::JsonLines => {
            let mut t = String::new();
            for (k, c) in coeffs.iter().enumerate() {
                let p = reference.as_ref().and_then(|p| p.get(k));
                t.push_str(&json_line(&json!({
                    "pair": [f.to_string(), g.to_string()],
                    "power": k,
                    "coefficient": c.to_string(),
                    "value": rational_to_f64(c),
                    "reference": p.map(|p| p.to_string()),
                    "matches_reference": p.map(|p| p == c),
                })));
            }
            t
        }
    };
    Ok(Output {
        text,
        passed,
        warnings: vec![],
    })
}
