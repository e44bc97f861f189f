//! Command-line front end: `sample`, `verify`, `bench` and `theory`.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 I/O failure,
//! 4 solver failure, 5 a verification check failed.

mod batch;
mod bench;
mod sample;
mod svg;
mod theory_cmd;
mod verify;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::ensembles::EnsembleParams;
use crate::error::{invalid, Error, Result};

pub use batch::{draw_batch, draw_one, Draw};
pub use bench::{cmd_bench, BenchRow};
pub use sample::{cmd_sample, SampleSummary};
pub use svg::overlay_svg;
pub use theory_cmd::cmd_theory;
pub use verify::{cmd_verify, CheckResult, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;
pub const EXIT_CHECK_FAILED: i32 = 5;

/// Thread count override.
pub const ENV_THREADS: &str = "WISHART_SPECTRA_THREADS";
/// Directory against which relative output paths are resolved.
pub const ENV_OUT_DIR: &str = "WISHART_SPECTRA_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Tridiagonal,
    Pencil,
    Dense,
    Closed2,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Tridiagonal => "tridiagonal",
            Method::Pencil => "pencil",
            Method::Dense => "dense",
            Method::Closed2 => "closed2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    All,
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Sample,
    Verify,
    Bench,
    Theory,
}

/// Fully resolved settings of one run; embedded in every output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n: usize,
    pub r: f64,
    pub beta: f64,
    pub sigma1: f64,
    pub method: Method,
    pub which: Which,
    pub samples: usize,
    pub seed: u64,
    pub threads: usize,
    pub output: PathBuf,
    pub format: Format,
    pub bins: Option<usize>,
}

impl RunConfig {
    pub fn params(&self) -> Result<EnsembleParams> {
        EnsembleParams::new(self.n, self.r, self.beta, self.sigma1)
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.params()?;
        if self.samples == 0 {
            return Err(invalid("--samples must be at least 1"));
        }
        if self.threads == 0 {
            return Err(invalid("--threads must be at least 1"));
        }
        if self.bins == Some(0) {
            return Err(invalid("--bins must be at least 1"));
        }
        match self.method {
            Method::Closed2 => {
                if self.n != 2 {
                    return Err(invalid("method closed2 requires --n 2"));
                }
                if self.beta != 1.0 && self.beta != 2.0 {
                    return Err(invalid("method closed2 requires beta 1 or 2"));
                }
                if self.sigma1 != 1.0 {
                    return Err(invalid("method closed2 does not support a spike"));
                }
            }
            Method::Dense => {
                p.require_dense()?;
            }
            Method::Tridiagonal | Method::Pencil => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Matrix size.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Number of samples / degrees-of-freedom parameter (defaults to n).
    #[arg(long)]
    pub r: Option<f64>,
    /// Dyson index.
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    /// Spike: standard deviation of the first column.
    #[arg(long, default_value_t = 1.0)]
    pub sigma1: f64,
    #[arg(long, value_enum, default_value_t = Method::Tridiagonal)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Which::All)]
    pub which: Which,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, env = ENV_THREADS, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Histogram bin count (Freedman-Diaconis when omitted).
    #[arg(long)]
    pub bins: Option<usize>,
}

impl RunArgs {
    pub fn to_config(&self, command: CommandKind, default_output: &str) -> Result<RunConfig> {
        let output = self
            .output
            .clone()
            .unwrap_or_else(|| PathBuf::from(default_output));
        let cfg = RunConfig {
            command,
            n: self.n,
            r: self.r.unwrap_or(self.n as f64),
            beta: self.beta,
            sigma1: self.sigma1,
            method: self.method,
            which: self.which,
            samples: self.samples,
            seed: self.seed,
            threads: self.threads,
            output: resolve_output(&output),
            format: self.format,
            bins: self.bins,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Smallest eigenvalue against `n e^{-n x}` (R = n, beta = 2).
    MinLaw,
    /// Rescaled largest eigenvalue against Tracy-Widom F2 (soft).
    TracyWidom,
    /// Two-sample KS per ordered eigenvalue against a second sampler.
    Cross,
    /// Mean and variance of the trace.
    Trace,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// KS significance level.
    #[arg(long, default_value_t = 0.001)]
    pub alpha: f64,
    /// Checks to run (default: every applicable one).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Comma-separated `NxR` cells, e.g. `8x8,64x64,256x256`.
    #[arg(long, default_value = "8x8,32x32")]
    pub grid: String,
    /// Methods to time.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Method::Tridiagonal, Method::Pencil, Method::Dense])]
    pub methods: Vec<Method>,
}

#[derive(Debug, Clone, Args)]
pub struct TheoryArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Write an SVG overlay of a sample histogram against the theory curve.
    #[arg(long)]
    pub svg: bool,
    /// Sample CSV (from `sample`) to overlay.
    #[arg(long)]
    pub overlay: Option<PathBuf>,
    /// Quadrature order of the F2 evaluator.
    #[arg(long, default_value_t = crate::theory::DEFAULT_TW_ORDER)]
    pub tw_order: usize,
    /// F2 table cache: read if present, written otherwise.
    #[arg(long)]
    pub tw_cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Draw eigenvalue samples.
    Sample(RunArgs),
    /// Check samples against exact laws, limits and other samplers.
    Verify(VerifyArgs),
    /// Time the sampling routes.
    Bench(BenchArgs),
    /// Tabulate reference curves.
    Theory(TheoryArgs),
}

#[derive(Debug, Clone, Parser)]
#[command(name = "wishart-spectra", version, about = "Wishart / beta-Laguerre eigenvalue sampling and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Resolves a relative path against `$WISHART_SPECTRA_OUT_DIR` when set.
pub fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(ENV_OUT_DIR) {
        Some(dir) if path.is_relative() && !dir.is_empty() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParameter(_) | Error::Domain(_) => EXIT_INVALID,
        Error::Io(_) | Error::Json(_) => EXIT_IO,
        Error::NonConvergence { .. }
        | Error::NegativeEigenvalue { .. }
        | Error::BracketViolation { .. }
        | Error::Quadrature(_) => EXIT_SOLVER,
    }
}

pub(crate) fn ensure_parent(path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    Ok(())
}

/// `foo/bar.csv` -> `foo/bar.<suffix>`.
pub(crate) fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".into());
    path.with_file_name(format!("{stem}.{suffix}"))
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Sample(args) => {
            let cfg = args.to_config(CommandKind::Sample, "samples.csv")?;
            cmd_sample(&cfg)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let cfg = args.run.to_config(CommandKind::Verify, "verify_report.json")?;
            let report = cmd_verify(&cfg, args.alpha, &args.checks)?;
            for c in &report.checks {
                eprintln!(
                    "{} {}{}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    if c.soft { " (soft)" } else { "" }
                );
            }
            Ok(if report.all_passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Bench(args) => {
            let cfg = args.run.to_config(CommandKind::Bench, "bench.csv")?;
            let grid = parse_grid(&args.grid)?;
            cmd_bench(&cfg, &grid, &args.methods)?;
            Ok(EXIT_OK)
        }
        Command::Theory(args) => {
            let cfg = args.run.to_config(CommandKind::Theory, "theory")?;
            cmd_theory(
                &cfg,
                args.tw_order,
                args.tw_cache.as_deref(),
                args.svg,
                args.overlay.as_deref(),
            )?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `8x8,32x40` into `(n, R)` pairs.
pub fn parse_grid(spec: &str) -> Result<Vec<(usize, f64)>> {
    spec.split(',')
        .filter(|c| !c.trim().is_empty())
        .map(|cell| {
            let (n, r) = cell
                .trim()
                .split_once(['x', 'X'])
                .ok_or_else(|| invalid(format!("grid cell {cell:?} is not NxR")))?;
            let n: usize = n.trim().parse().map_err(|_| invalid(format!("bad n in {cell:?}")))?;
            let r: f64 = r.trim().parse().map_err(|_| invalid(format!("bad R in {cell:?}")))?;
            EnsembleParams::unspiked(n, r, 1.0)?;
            Ok((n, r))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|g| {
            if g.is_empty() {
                Err(invalid("empty --grid"))
            } else {
                Ok(g)
            }
        })
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
