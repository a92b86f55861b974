//! `olct` command-line tool.
//!
//! Exit codes: 0 success, 1 a verification certificate failed, 2 bad
//! arguments, 3 I/O or file-format failure, 4 numeric-domain error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use olct::io::{
    parse_signal_kind, read_plot_source, write_pitt_csv, write_signal_csv, PlotSource, ReportFile,
    SignalEcho, SignalFile, SignalReport,
};
use olct::signals::{DEFAULT_COUNT, DEFAULT_HALF_WIDTH};
use olct::up::{parse_checks, Tolerance, ANALYTIC_TOL};
use olct::{
    battery, generate, pitt_constant, run_suite, transform, Error, Grid, Method, OlctParams,
    SampledSignal, SignalSpec, SuiteConfig,
};

const TOL_ENV: &str = "OLCT_TOL";

#[derive(Parser)]
#[command(name = "olct", version, about = "Offset linear canonical transforms and uncertainty certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a signal and write the spectrum file.
    Transform(TransformArgs),
    /// Run the uncertainty-principle checks and write a report.
    Verify(VerifyArgs),
    /// Turn a spectrum or report file into CSV.
    ExportPlotdata(ExportArgs),
    /// Write a generated signal to a file.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Number of samples.
    #[arg(long, default_value_t = DEFAULT_COUNT)]
    count: usize,
    /// Samples cover [-half_width, half_width].
    #[arg(long, default_value_t = DEFAULT_HALF_WIDTH)]
    half_width: f64,
}

#[derive(Args)]
struct SourceArgs {
    /// Generator, e.g. `gaussian`, `hermite,order=2`, `rect,width=1`, `noise,seed=7`, `extremal,alpha=0.3`.
    #[arg(long, conflicts_with = "input")]
    signal: Option<String>,
    /// Signal file to read instead of generating.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args)]
struct TransformArgs {
    /// `a,b,c,d,tau,eta` with ad - bc = 1.
    #[arg(long, allow_hyphen_values = true)]
    params: String,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value = "fast", value_parser = ["fast", "direct"])]
    method: String,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "0,1,-1,0,0,0")]
    params: String,
    #[command(flatten)]
    source: SourceArgs,
    /// `all`, `none`, or a comma list of nazarov, hardy, beurling, pitt, logarithmic, entropic, heisenberg.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Pitt exponents in [0, 1).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Vec<f64>,
    /// Hardy decay rates.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    /// Beurling truncation windows.
    #[arg(long, value_delimiter = ',')]
    windows: Vec<f64>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Leave the timestamp out so identical runs give identical files.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Spectrum/signal file or report file.
    #[arg(long)]
    input: PathBuf,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "0,1,-1,0,0,0")]
    params: String,
    #[arg(long)]
    signal: String,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Lib(Error),
    CertificateFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Transform(a) => cmd_transform(a),
        Command::Verify(a) => cmd_verify(a),
        Command::ExportPlotdata(a) => cmd_export(a),
        Command::Generate(a) => cmd_generate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::CertificateFailed) => {
            eprintln!("olct: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("olct: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("olct: {e}");
            ExitCode::from(if e.is_numeric_domain() { 4 } else { 3 })
        }
    }
}

fn parse_params(s: &str) -> CliResult<OlctParams> {
    OlctParams::parse(s).map_err(|e| match e {
        Error::BadConfig(msg) => Failure::Usage(msg),
        other => Failure::Lib(other),
    })
}

fn make_grid(g: &GridArgs) -> CliResult<Grid> {
    if !(g.half_width > 0.0) || !g.half_width.is_finite() {
        return Err(Failure::Usage(format!("--half-width must be positive, got {}", g.half_width)));
    }
    Grid::window(g.count, g.half_width).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_spec(selector: &str, params: &OlctParams, grid: &GridArgs) -> CliResult<SignalSpec> {
    let kind = parse_signal_kind(selector, params).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(SignalSpec::new(kind, make_grid(grid)?))
}

/// The signals a command works on: one from `--signal`/`--input`, or `None`.
fn single_source(src: &SourceArgs, params: &OlctParams) -> CliResult<Option<(SampledSignal, SignalEcho)>> {
    if let Some(path) = &src.input {
        let s = SignalFile::read(path)?.to_signal()?;
        let echo = SignalEcho {
            label: "file".into(),
            spec: None,
            path: Some(path.display().to_string()),
            grid: *s.grid(),
        };
        return Ok(Some((s, echo)));
    }
    match &src.signal {
        Some(sel) => {
            let spec = parse_spec(sel, params, &src.grid)?;
            let s = generate(&spec)?;
            Ok(Some((s, echo_for(&spec))))
        }
        None => Ok(None),
    }
}

fn echo_for(spec: &SignalSpec) -> SignalEcho {
    SignalEcho { label: spec.kind.label(), spec: Some(spec.clone()), path: None, grid: spec.grid }
}

fn cmd_transform(a: TransformArgs) -> CliResult<()> {
    let params = parse_params(&a.params)?;
    let method: Method = a.method.parse()?;
    let (f, echo) = single_source(&a.source, &params)?
        .ok_or_else(|| Failure::Usage("transform needs --signal or --input".into()))?;
    let out = transform(&f, &params, method)?;
    let mut meta = BTreeMap::new();
    meta.insert("kind".into(), json!("spectrum"));
    meta.insert("params".into(), json!(params.as_array()));
    meta.insert("method".into(), json!(a.method));
    meta.insert("source".into(), serde_json::to_value(&echo).unwrap_or(Value::Null));
    SignalFile::from_signal(&out, meta).write(&a.out)?;
    Ok(())
}

fn tolerance_from_env() -> CliResult<Tolerance> {
    match std::env::var(TOL_ENV) {
        Ok(v) => {
            let allowance: f64 = v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{TOL_ENV}: cannot parse `{v}`")))?;
            if !(allowance >= 0.0) || !allowance.is_finite() {
                return Err(Failure::Usage(format!("{TOL_ENV} must be a non-negative number")));
            }
            Ok(Tolerance { analytic: ANALYTIC_TOL, allowance })
        }
        Err(_) => Ok(Tolerance::default()),
    }
}

fn cmd_verify(a: VerifyArgs) -> CliResult<()> {
    let checks = parse_checks(&a.suite).map_err(|e| Failure::Usage(e.to_string()))?;
    let tol = tolerance_from_env()?;
    for &l in &a.lambda {
        pitt_constant(l)?;
    }
    let params = parse_params(&a.params)?;

    let mut config = SuiteConfig { checks, tol, ..SuiteConfig::default() };
    if !a.lambda.is_empty() {
        config.lambdas = a.lambda.clone();
    }
    if !a.alpha.is_empty() {
        config.alphas = a.alpha.clone();
    }
    if !a.windows.is_empty() {
        config.windows = a.windows.clone();
    }

    let inputs: Vec<(SampledSignal, SignalEcho, bool)> = match single_source(&a.source, &params)? {
        Some((s, echo)) => {
            let schwartz = echo.spec.as_ref().is_none_or(|sp| sp.kind.is_schwartz());
            vec![(s, echo, schwartz)]
        }
        None => {
            let grid = make_grid(&a.source.grid)?;
            battery(&params, grid)
                .into_iter()
                .map(|spec| Ok((generate(&spec)?, echo_for(&spec), spec.kind.is_schwartz())))
                .collect::<CliResult<_>>()?
        }
    };

    let runs: Vec<SignalReport> = inputs
        .into_iter()
        .map(|(f, echo, schwartz)| {
            let cfg = SuiteConfig { schwartz, ..config.clone() };
            SignalReport::new(echo, &run_suite(&f, &params, &cfg))
        })
        .collect();
    let mut report = ReportFile::new(params, runs);
    if !a.no_timestamp {
        report = report.stamped();
    }
    if let Some(path) = &a.report {
        report.write(path)?;
    }
    summarize(&report);

    let first_error = report
        .runs
        .iter()
        .flat_map(|r| r.errors.iter())
        .next();
    if let Some(e) = first_error {
        eprintln!("olct: {}: {}", e.check, e.message);
        return Err(Failure::Lib(Error::BadConfig("one or more checks could not be evaluated".into())));
    }
    if !report.pass {
        return Err(Failure::CertificateFailed);
    }
    Ok(())
}

fn summarize(report: &ReportFile) {
    let mut err = std::io::stderr().lock();
    for run in &report.runs {
        for c in &run.certificates {
            let verdict = match (c.pass, c.informational) {
                (_, true) => "info",
                (true, false) => "pass",
                (false, false) => "FAIL",
            };
            let _ = writeln!(
                err,
                "{:<10} {:<12} {verdict}  lhs={:.6e} rhs={:.6e} margin={:.3e}",
                run.signal.label, c.name.as_str(), c.lhs, c.rhs, c.margin
            );
        }
    }
}

fn cmd_export(a: ExportArgs) -> CliResult<()> {
    let source = read_plot_source(&a.input)?;
    let write = |w: &mut dyn Write| -> olct::Result<()> {
        match &source {
            PlotSource::Signal(s) => write_signal_csv(w, s),
            PlotSource::Report(r) => write_pitt_csv(w, r),
        }
    };
    match &a.out {
        Some(path) => {
            let mut file = create(path)?;
            write(&mut file)?;
        }
        None => write(&mut std::io::stdout().lock())?,
    }
    Ok(())
}

fn create(path: &Path) -> olct::Result<std::fs::File> {
    std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn cmd_generate(a: GenerateArgs) -> CliResult<()> {
    let params = parse_params(&a.params)?;
    let spec = parse_spec(&a.signal, &params, &a.grid)?;
    let s = generate(&spec)?;
    let mut meta = BTreeMap::new();
    meta.insert("kind".into(), json!("signal"));
    meta.insert("spec".into(), serde_json::to_value(&spec).unwrap_or(Value::Null));
    SignalFile::from_signal(&s, meta).write(&a.out)?;
    Ok(())
}
