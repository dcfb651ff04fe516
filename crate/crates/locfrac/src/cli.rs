//! Batch command-line front end.
//!
//! Every subcommand is a thin wrapper over one library call and emits its
//! result as CSV (default) or JSON, to stdout or `--out FILE`. Output is
//! deterministic: numbers are printed with 17 significant digits
//! (round-trip safe for f64), there are no timestamps, and repeated runs
//! with the same inputs are byte-identical.
//!
//! Exit codes: 0 success, 1 domain/validation/usage error, 2 numerical
//! non-convergence.

use crate::error::Error;
use crate::numeric::{holder_exponent, riemann_sum_diagnostic, HolderEstimate};
use crate::series::{FractalSeries, FractionalOrder};
use crate::special::{mittag_leffler, MittagLefflerValue};
use crate::taylor::{
    convergence_table, find_xi, remainder_bound, taylor_polynomial, ConvergenceTable,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Entry point used by the binary and by tests. `argv` is the full
/// argument vector including the program name. Returns the process exit
/// code instead of exiting so that callers can assert on it.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.exit_code()
        }
    }
}

#[derive(Parser)]
#[command(
    name = "locfrac",
    about = "Local fractional calculus on fractal power series",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Csv, global = false)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesInput {
    /// Series file with schema {"alpha": a, "center": x0, "coeffs": [...]}
    #[arg(long, value_name = "FILE")]
    series: Option<PathBuf>,
    /// Generated series family (supported: e_alpha); needs --alpha and --degree
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// Fractional order for --family
    #[arg(long)]
    alpha: Option<f64>,
    /// Truncation degree for --family
    #[arg(long)]
    degree: Option<usize>,
}

impl SeriesInput {
    fn resolve(&self) -> Result<FractalSeries, CliFailure> {
        resolve_series(
            self.series.as_deref(),
            self.family.as_deref(),
            self.alpha,
            self.degree,
        )
    }
}

/// Like [`SeriesInput`], but `taylor` already owns `--degree` for the
/// Taylor degree, so the family truncation degree is `--family-degree`.
#[derive(Args)]
struct TaylorSeriesInput {
    /// Series file with schema {"alpha": a, "center": x0, "coeffs": [...]}
    #[arg(long, value_name = "FILE")]
    series: Option<PathBuf>,
    /// Generated series family (supported: e_alpha); needs --alpha and --family-degree
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// Fractional order for --family
    #[arg(long)]
    alpha: Option<f64>,
    /// Truncation degree for --family
    #[arg(long = "family-degree")]
    family_degree: Option<usize>,
}

impl TaylorSeriesInput {
    fn resolve(&self) -> Result<FractalSeries, CliFailure> {
        resolve_series(
            self.series.as_deref(),
            self.family.as_deref(),
            self.alpha,
            self.family_degree,
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Mittag-Leffler function E_alpha(x^alpha)
    Ml {
        #[arg(long)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Relative stopping tolerance for the series
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Taylor polynomial of a series, with optional evaluation and bound
    Taylor {
        #[command(flatten)]
        input: TaylorSeriesInput,
        #[arg(long, allow_negative_numbers = true)]
        x0: f64,
        /// Taylor degree N
        #[arg(long)]
        degree: usize,
        /// Also evaluate the polynomial and bound the remainder at this point
        #[arg(long, allow_negative_numbers = true)]
        at: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// k-fold local fractional derivative of a series
    Deriv {
        #[command(flatten)]
        input: SeriesInput,
        /// Number of derivative applications
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Antiderivative of a series, or a definite integral with --a/--b
    Integrate {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Mean-value point xi and its residual for f(x) - f(x0)
    Mvt {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long, allow_negative_numbers = true)]
        x0: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Per-degree convergence table at an evaluation point
    Converge {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long, allow_negative_numbers = true)]
        x0: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Largest Taylor degree in the table
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Hoelder-exponent estimate for a power function (t - x0)^beta
    Holder {
        /// Expression family, written pow:<beta> (e.g. pow:0.5)
        #[arg(long, value_name = "POW_BETA")]
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        x0: f64,
        #[arg(long, default_value_t = 1e-6)]
        delta_min: f64,
        #[arg(long, default_value_t = 1e-2)]
        delta_max: f64,
        #[arg(long, default_value_t = 32)]
        samples: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Literal partition sums of f = 1, demonstrating the N^(1-alpha) growth
    RiemannDemo {
        #[arg(long)]
        alpha: f64,
        /// Comma-separated partition sizes, strictly increasing
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        b: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

/// A CLI failure with its exit-code class.
#[derive(Debug)]
enum CliFailure {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl std::fmt::Display for CliFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliFailure::Lib(e) => write!(f, "{e}"),
            CliFailure::Usage(msg) => write!(f, "{msg}"),
            CliFailure::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        CliFailure::Lib(e)
    }
}

impl CliFailure {
    fn exit_code(&self) -> i32 {
        match self {
            CliFailure::Lib(
                Error::MlNonConvergence { .. }
                | Error::MlOverflow { .. }
                | Error::QuadratureNotConverged { .. }
                | Error::MeanValueNotFound,
            ) => 2,
            _ => 1,
        }
    }
}

/// 17-significant-digit decimal-exponent form; round-trips f64 exactly
/// and is locale independent.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

trait Report: Serialize {
    fn to_csv(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut text =
                    serde_json::to_string_pretty(self).expect("report serialization cannot fail");
                text.push('\n');
                text
            }
        }
    }
}

impl Report for MittagLefflerValue {
    fn to_csv(&self) -> String {
        let mut out = String::from("field,value\n");
        let _ = writeln!(out, "alpha,{}", num(self.alpha.value()));
        let _ = writeln!(out, "x,{}", num(self.x));
        let _ = writeln!(out, "value,{}", num(self.value));
        let _ = writeln!(out, "terms_used,{}", self.terms_used);
        let _ = writeln!(out, "tail_bound,{}", num(self.tail_bound));
        out
    }
}

impl Report for FractalSeries {
    fn to_csv(&self) -> String {
        let mut out = String::from("alpha,center,k,coefficient\n");
        let alpha = num(self.alpha().value());
        let center = num(self.center());
        for (k, &c) in self.coeffs().iter().enumerate() {
            let _ = writeln!(out, "{alpha},{center},{k},{}", num(c));
        }
        out
    }
}

impl Report for ConvergenceTable {
    fn to_csv(&self) -> String {
        ConvergenceTable::to_csv(self)
    }
}

#[derive(Serialize)]
struct TaylorReport {
    alpha: f64,
    x0: f64,
    degree: usize,
    at: Option<f64>,
    value: Option<f64>,
    remainder_bound: Option<f64>,
    coefficients: Vec<f64>,
}

impl Report for TaylorReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("field,value\n");
        let _ = writeln!(out, "alpha,{}", num(self.alpha));
        let _ = writeln!(out, "x0,{}", num(self.x0));
        let _ = writeln!(out, "degree,{}", self.degree);
        if let Some(at) = self.at {
            let _ = writeln!(out, "at,{}", num(at));
        }
        if let Some(value) = self.value {
            let _ = writeln!(out, "value,{}", num(value));
        }
        if let Some(bound) = self.remainder_bound {
            let _ = writeln!(out, "remainder_bound,{}", num(bound));
        }
        for (k, &c) in self.coefficients.iter().enumerate() {
            let _ = writeln!(out, "c{k},{}", num(c));
        }
        out
    }
}

#[derive(Serialize)]
struct DefiniteIntegralReport {
    alpha: f64,
    a: f64,
    b: f64,
    value: f64,
}

impl Report for DefiniteIntegralReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("field,value\n");
        let _ = writeln!(out, "alpha,{}", num(self.alpha));
        let _ = writeln!(out, "a,{}", num(self.a));
        let _ = writeln!(out, "b,{}", num(self.b));
        let _ = writeln!(out, "value,{}", num(self.value));
        out
    }
}

#[derive(Serialize)]
struct MeanValueReport {
    alpha: f64,
    x0: f64,
    x: f64,
    xi: f64,
    residual: f64,
}

impl Report for MeanValueReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("field,value\n");
        let _ = writeln!(out, "alpha,{}", num(self.alpha));
        let _ = writeln!(out, "x0,{}", num(self.x0));
        let _ = writeln!(out, "x,{}", num(self.x));
        let _ = writeln!(out, "xi,{}", num(self.xi));
        let _ = writeln!(out, "residual,{}", num(self.residual));
        out
    }
}

#[derive(Serialize)]
struct HolderReport {
    expr: String,
    x0: f64,
    delta_min: f64,
    delta_max: f64,
    samples: usize,
    exponent: f64,
    r_squared: f64,
}

impl Report for HolderReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("field,value\n");
        let _ = writeln!(out, "expr,{}", self.expr);
        let _ = writeln!(out, "x0,{}", num(self.x0));
        let _ = writeln!(out, "delta_min,{}", num(self.delta_min));
        let _ = writeln!(out, "delta_max,{}", num(self.delta_max));
        let _ = writeln!(out, "samples,{}", self.samples);
        let _ = writeln!(out, "exponent,{}", num(self.exponent));
        let _ = writeln!(out, "r_squared,{}", num(self.r_squared));
        out
    }
}

#[derive(Serialize)]
struct RiemannRow {
    #[serde(rename = "N")]
    n: usize,
    sum: f64,
}

#[derive(Serialize)]
struct RiemannReport {
    alpha: f64,
    a: f64,
    b: f64,
    rows: Vec<RiemannRow>,
}

impl Report for RiemannReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("N,sum\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{}", row.n, num(row.sum));
        }
        out
    }
}

fn resolve_series(
    path: Option<&Path>,
    family: Option<&str>,
    alpha: Option<f64>,
    degree: Option<usize>,
) -> Result<FractalSeries, CliFailure> {
    match (path, family) {
        (Some(path), None) => {
            if alpha.is_some() || degree.is_some() {
                return Err(CliFailure::Usage(
                    "--alpha and the family degree only apply to --family".into(),
                ));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliFailure::Io(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| {
                CliFailure::Usage(format!("invalid series file {}: {e}", path.display()))
            })
        }
        (None, Some(name)) => {
            let alpha =
                alpha.ok_or_else(|| CliFailure::Usage("--family requires --alpha".into()))?;
            let degree = degree
                .ok_or_else(|| CliFailure::Usage("--family requires a truncation degree".into()))?;
            match name {
                "e_alpha" => Ok(FractalSeries::mittag_leffler(
                    FractionalOrder::new(alpha)?,
                    degree,
                )?),
                other => Err(CliFailure::Usage(format!(
                    "unknown family {other:?}; supported families: e_alpha"
                ))),
            }
        }
        _ => Err(CliFailure::Usage(
            "provide exactly one of --series FILE or --family NAME".into(),
        )),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliFailure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliFailure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliFailure> {
    match command {
        Command::Ml {
            alpha,
            x,
            tol,
            output,
        } => {
            let order = FractionalOrder::new(alpha)?;
            let result = mittag_leffler(order, x, tol)?;
            emit(&result.render(output.format), output.out.as_deref())
        }
        Command::Taylor {
            input,
            x0,
            degree,
            at,
            output,
        } => {
            let f = input.resolve()?;
            let taylor = taylor_polynomial(&f, x0, degree)?;
            let (value, bound) = match at {
                Some(at) => (
                    Some(taylor.polynomial.eval(at)?),
                    Some(remainder_bound(&f, x0, degree, at)?),
                ),
                None => (None, None),
            };
            let report = TaylorReport {
                alpha: f.alpha().value(),
                x0,
                degree,
                at,
                value,
                remainder_bound: bound,
                coefficients: taylor.polynomial.coeffs().to_vec(),
            };
            emit(&report.render(output.format), output.out.as_deref())
        }
        Command::Deriv { input, k, output } => {
            let f = input.resolve()?;
            let result = f.sequential_derivative(k);
            emit(&result.render(output.format), output.out.as_deref())
        }
        Command::Integrate {
            input,
            a,
            b,
            output,
        } => {
            let f = input.resolve()?;
            match (a, b) {
                (Some(a), Some(b)) => {
                    let report = DefiniteIntegralReport {
                        alpha: f.alpha().value(),
                        a,
                        b,
                        value: f.definite_integral(a, b)?,
                    };
                    emit(&report.render(output.format), output.out.as_deref())
                }
                (None, None) => {
                    let result = f.lf_integral();
                    emit(&result.render(output.format), output.out.as_deref())
                }
                _ => Err(CliFailure::Usage(
                    "--a and --b must be given together".into(),
                )),
            }
        }
        Command::Mvt {
            input,
            x0,
            x,
            output,
        } => {
            let f = input.resolve()?;
            let xi = find_xi(&f, x0, x)?;
            let a = f.alpha().value();
            let factor = (x - x0).powf(a) / crate::special::gamma(1.0 + a)?;
            let delta = f.eval(x)? - f.eval(x0)?;
            let residual = f.lf_derivative().eval(xi)? * factor - delta;
            let report = MeanValueReport {
                alpha: a,
                x0,
                x,
                xi,
                residual,
            };
            emit(&report.render(output.format), output.out.as_deref())
        }
        Command::Converge {
            input,
            x0,
            x,
            nmax,
            output,
        } => {
            let f = input.resolve()?;
            let table = convergence_table(&f, x0, x, nmax)?;
            emit(&table.render(output.format), output.out.as_deref())
        }
        Command::Holder {
            expr,
            x0,
            delta_min,
            delta_max,
            samples,
            output,
        } => {
            let beta = parse_pow_expr(&expr)?;
            let estimate: HolderEstimate =
                holder_exponent(|t| (t - x0).powf(beta), x0, delta_min, delta_max, samples)?;
            let report = HolderReport {
                expr,
                x0,
                delta_min,
                delta_max,
                samples,
                exponent: estimate.exponent,
                r_squared: estimate.r_squared,
            };
            emit(&report.render(output.format), output.out.as_deref())
        }
        Command::RiemannDemo {
            alpha,
            sizes,
            a,
            b,
            output,
        } => {
            let order = FractionalOrder::new(alpha)?;
            let rows = riemann_sum_diagnostic(|_| 1.0, a, b, order, &sizes)?;
            let report = RiemannReport {
                alpha,
                a,
                b,
                rows: rows
                    .into_iter()
                    .map(|(n, sum)| RiemannRow { n, sum })
                    .collect(),
            };
            emit(&report.render(output.format), output.out.as_deref())
        }
    }
}

fn parse_pow_expr(expr: &str) -> Result<f64, CliFailure> {
    let beta = expr
        .strip_prefix("pow:")
        .and_then(|raw| raw.parse::<f64>().ok())
        .filter(|beta| beta.is_finite());
    beta.ok_or_else(|| {
        CliFailure::Usage(format!(
            "--expr must look like pow:<beta> (e.g. pow:0.5), got {expr:?}"
        ))
    })
}
