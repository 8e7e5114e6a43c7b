//! Argument parsing and command dispatch for the `jahangir` binary.
//!
//! Results go to the output sink, diagnostics to the error sink. Exit
//! statuses: 0 success, 1 usage error, 2 computation error, 3 verification
//! failure.

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jahangir_core::closed_forms::{verify_against_oracle, ERRATA};
use jahangir_core::distances::distance_distribution;
use jahangir_core::family_fit::{fit, sample_counts, verify_formula};
use jahangir_core::hosoya::{from_distribution, wiener_from_distribution};
use jahangir_core::{ExactFamilyFormula, Family, Graph, HosoyaPolynomial};
use num_rational::Ratio;
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphCommand {
    Generate,
    Distances,
    Hosoya,
    Wiener,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Family { family: Family, m: u64 },
    File(PathBuf),
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunConfig {
    Graph {
        command: GraphCommand,
        input: Input,
        format: Format,
    },
    Verify {
        m_range: RangeInclusive<u64>,
        format: Format,
    },
    Fit {
        family: Family,
        samples: Vec<u64>,
        degree: usize,
        holdout: Vec<u64>,
        format: Format,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UsageError {
    /// `--help` or `--version`; the text belongs on the output stream.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "jahangir",
    version,
    about = "Hosoya polynomials and Wiener indices of graph families"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Emit a graph in edge-list format.
    Generate(GraphArgs),
    /// Number of vertex pairs at each distance.
    Distances(GraphArgs),
    /// Hosoya polynomial.
    Hosoya(GraphArgs),
    /// Wiener index.
    Wiener(GraphArgs),
    /// Check the J(5, m) closed forms against brute-force BFS.
    Verify(VerifyArgs),
    /// Interpolate per-distance count formulas for a family and check them on holdout members.
    Fit(FitArgs),
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// jahangir, cycle, path, star, complete, wheel or random.
    #[arg(long)]
    family: Option<String>,
    /// Jahangir spoke spacing.
    #[arg(long)]
    n: Option<String>,
    /// Edge probability for random graphs, e.g. 1/10 or 0.1.
    #[arg(long)]
    p: Option<String>,
    /// Seed for random graphs.
    #[arg(long)]
    seed: Option<String>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Family parameter (spokes, length or vertex count).
    #[arg(long)]
    m: Option<String>,
    /// Edge-list file; use instead of --family.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<String>,
    /// Inclusive range a..b.
    #[arg(long = "m-range")]
    m_range: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct FitArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Comma-separated parameters to fit on; items may be ranges a..b.
    #[arg(long)]
    samples: String,
    /// Polynomial degree in the family parameter.
    #[arg(long)]
    degree: String,
    /// Comma-separated parameters to check the fit on.
    #[arg(long)]
    holdout: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn invalid(msg: impl Into<String>) -> UsageError {
    UsageError::Invalid(msg.into())
}

fn parse_number<T: std::str::FromStr>(flag: &str, value: &str) -> Result<T, UsageError> {
    value
        .trim()
        .parse()
        .map_err(|_| invalid(format!("invalid value {value:?} for {flag}")))
}

/// Inclusive `a..b`.
fn parse_range(flag: &str, value: &str) -> Result<RangeInclusive<u64>, UsageError> {
    let (a, b) = value
        .split_once("..")
        .ok_or_else(|| invalid(format!("invalid value {value:?} for {flag}: expected a..b")))?;
    let (a, b) = (parse_number(flag, a)?, parse_number(flag, b)?);
    if a > b {
        return Err(invalid(format!("invalid value {value:?} for {flag}: empty range")));
    }
    Ok(a..=b)
}

/// Comma-separated values, each a number or an inclusive range.
fn parse_list(flag: &str, value: &str) -> Result<Vec<u64>, UsageError> {
    let mut out = Vec::new();
    for item in value.split(',').filter(|s| !s.trim().is_empty()) {
        if item.contains("..") {
            out.extend(parse_range(flag, item)?);
        } else {
            out.push(parse_number(flag, item)?);
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(dup) = out.iter().find(|&&v| !seen.insert(v)) {
        return Err(invalid(format!("{flag} lists {dup} more than once")));
    }
    Ok(out)
}

/// `a/b`, an integer, or a decimal such as `0.25`.
fn parse_probability(value: &str) -> Result<Ratio<u64>, UsageError> {
    let bad = || invalid(format!("invalid value {value:?} for --p"));
    let ratio = if let Some((num, den)) = value.split_once('/') {
        let den: u64 = parse_number("--p", den)?;
        if den == 0 {
            return Err(bad());
        }
        Ratio::new(parse_number("--p", num)?, den)
    } else if let Some((int, frac)) = value.split_once('.') {
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { parse_number("--p", int)? };
        let frac: u64 = if frac.is_empty() { 0 } else { parse_number("--p", frac)? };
        Ratio::new(
            int.checked_mul(den).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?,
            den,
        )
    } else {
        Ratio::from_integer(parse_number("--p", value)?)
    };
    if *ratio.numer() == 0 || ratio.numer() > ratio.denom() {
        return Err(invalid(format!("--p must lie in (0, 1], got {value}")));
    }
    Ok(ratio)
}

impl FamilyArgs {
    fn resolve(&self, default_name: Option<&str>) -> Result<Family, UsageError> {
        let name = self
            .family
            .as_deref()
            .or(default_name)
            .ok_or_else(|| invalid("one of --family or --input is required"))?;
        let reject = |flag: &str, present: bool| {
            if present {
                Err(invalid(format!("{flag} does not apply to --family {name}")))
            } else {
                Ok(())
            }
        };
        if name != "jahangir" {
            reject("--n", self.n.is_some())?;
        }
        if name != "random" {
            reject("--p", self.p.is_some())?;
            reject("--seed", self.seed.is_some())?;
        }
        Ok(match name {
            "jahangir" => {
                let n: usize = match &self.n {
                    Some(v) => parse_number("--n", v)?,
                    None => return Err(invalid("--family jahangir requires --n")),
                };
                if n < 1 {
                    return Err(invalid(format!("--n must be >= 1, got {n}")));
                }
                Family::Jahangir { n }
            }
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "star" => Family::Star,
            "complete" => Family::Complete,
            "wheel" => Family::Wheel,
            "random" => Family::RandomConnected {
                edge_probability: parse_probability(
                    self.p
                        .as_deref()
                        .ok_or_else(|| invalid("--family random requires --p"))?,
                )?,
                seed: match &self.seed {
                    Some(v) => parse_number("--seed", v)?,
                    None => return Err(invalid("--family random requires --seed")),
                },
            },
            other => return Err(invalid(format!("unknown family {other:?} for --family"))),
        })
    }
}

/// Smallest parameter each family accepts.
fn min_parameter(family: &Family) -> u64 {
    match family {
        Family::Jahangir { .. } | Family::Cycle | Family::Wheel => 3,
        _ => 1,
    }
}

fn check_parameter(family: &Family, flag: &str, m: u64) -> Result<(), UsageError> {
    let min = min_parameter(family);
    if m < min {
        return Err(invalid(format!(
            "{flag} {m} is out of range for --family {}: must be >= {min}",
            family.name()
        )));
    }
    Ok(())
}

/// Parses `argv` (without the program name) into a validated configuration.
pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("jahangir")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => UsageError::Info(e.to_string()),
        _ => UsageError::Invalid(e.to_string().trim_end().to_string()),
    })?;

    let graph = |command, args: GraphArgs| -> Result<RunConfig, UsageError> {
        let input = match (&args.input, &args.family.family) {
            (Some(_), Some(_)) => return Err(invalid("--input and --family are mutually exclusive")),
            (Some(path), None) => {
                if args.m.is_some() || args.family.n.is_some() || args.family.p.is_some() || args.family.seed.is_some()
                {
                    return Err(invalid("--n, --m, --p and --seed do not apply to --input"));
                }
                Input::File(path.clone())
            }
            (None, _) => {
                let family = args.family.resolve(None)?;
                let m = match &args.m {
                    Some(v) => parse_number("--m", v)?,
                    None => return Err(invalid(format!("--family {} requires --m", family.name()))),
                };
                check_parameter(&family, "--m", m)?;
                Input::Family { family, m }
            }
        };
        Ok(RunConfig::Graph {
            command,
            input,
            format: args.format,
        })
    };

    match cli.command {
        Cmd::Generate(a) => graph(GraphCommand::Generate, a),
        Cmd::Distances(a) => graph(GraphCommand::Distances, a),
        Cmd::Hosoya(a) => graph(GraphCommand::Hosoya, a),
        Cmd::Wiener(a) => graph(GraphCommand::Wiener, a),
        Cmd::Verify(a) => {
            if let Some(f) = a.family.as_deref().filter(|&f| f != "jahangir") {
                return Err(invalid(format!("verify supports only --family jahangir, got {f:?}")));
            }
            if let Some(n) = &a.n {
                let n: usize = parse_number("--n", n)?;
                if n != 5 {
                    return Err(invalid(format!("verify has closed forms only for --n 5, got {n}")));
                }
            }
            let m_range = parse_range("--m-range", &a.m_range)?;
            if *m_range.start() < 3 {
                return Err(invalid(format!("--m-range must start at m >= 3, got {}", a.m_range)));
            }
            Ok(RunConfig::Verify {
                m_range,
                format: a.format,
            })
        }
        Cmd::Fit(a) => {
            let family = a.family.resolve(Some("jahangir"))?;
            let samples = parse_list("--samples", &a.samples)?;
            let degree: usize = parse_number("--degree", &a.degree)?;
            let holdout = match &a.holdout {
                Some(h) => parse_list("--holdout", h)?,
                None => Vec::new(),
            };
            for &m in &samples {
                check_parameter(&family, "--samples", m)?;
            }
            for &m in &holdout {
                check_parameter(&family, "--holdout", m)?;
            }
            if samples.len() < degree + 1 {
                return Err(invalid(format!(
                    "--degree {degree} needs at least {} --samples, got {}",
                    degree + 1,
                    samples.len()
                )));
            }
            if let Some(m) = holdout.iter().find(|m| samples.contains(m)) {
                return Err(invalid(format!("--holdout {m} also appears in --samples")));
            }
            Ok(RunConfig::Fit {
                family,
                samples,
                degree,
                holdout,
                format: a.format,
            })
        }
    }
}

#[derive(Debug, Error)]
enum RunError {
    #[error("{0}")]
    Compute(#[from] jahangir_core::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Io(#[from] io::Error),
}

fn load_graph(input: &Input) -> Result<Graph, RunError> {
    match input {
        Input::Family { family, m } => Ok(family.generate(*m)?),
        Input::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| RunError::Read {
                path: path.clone(),
                source,
            })?;
            Ok(Graph::parse_edge_list(&text)?)
        }
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn run_graph(command: GraphCommand, input: &Input, format: Format, out: &mut dyn Write) -> Result<i32, RunError> {
    let g = load_graph(input)?;
    if command == GraphCommand::Generate {
        match format {
            Format::Text => out.write_all(g.to_edge_list_string().as_bytes())?,
            Format::Json => write_json(
                out,
                &json!({
                    "vertex_count": g.vertex_count(),
                    "edge_count": g.edge_count(),
                    "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                }),
            )?,
        }
        return Ok(EXIT_OK);
    }

    let dd = distance_distribution(&g)?;
    match (command, format) {
        (GraphCommand::Distances, Format::Text) => {
            for (i, c) in dd.by_distance().iter().enumerate() {
                writeln!(out, "{} {c}", i + 1)?;
            }
        }
        (GraphCommand::Distances, Format::Json) => write_json(
            out,
            &json!({
                "vertex_count": g.vertex_count(),
                "diameter": dd.diameter(),
                "counts": dd.by_distance(),
            }),
        )?,
        (GraphCommand::Hosoya, Format::Text) => writeln!(out, "{}", from_distribution::<jahangir_core::Integer>(&dd))?,
        (GraphCommand::Hosoya, Format::Json) => {
            let h: HosoyaPolynomial = from_distribution(&dd);
            write_json(out, &h.to_json())?
        }
        (GraphCommand::Wiener, _) => writeln!(out, "{}", wiener_from_distribution(&dd))?,
        (GraphCommand::Generate, _) => unreachable!(),
    }
    Ok(EXIT_OK)
}

fn run_verify(m_range: RangeInclusive<u64>, format: Format, out: &mut dyn Write) -> Result<i32, RunError> {
    let report = verify_against_oracle(m_range)?;
    match format {
        Format::Json => write_json(out, &report.to_json())?,
        Format::Text => {
            for r in &report.results {
                match r.first_mismatch {
                    None if r.pass() => writeln!(out, "m={} pass W={}", r.m, r.wiener_oracle)?,
                    None => writeln!(
                        out,
                        "m={} FAIL wiener closed={} oracle={}",
                        r.m, r.wiener_closed, r.wiener_oracle
                    )?,
                    Some(k) => writeln!(
                        out,
                        "m={} FAIL at x^{k}: closed={} oracle={}",
                        r.m,
                        r.closed_form.coefficient(k),
                        r.oracle.coefficient(k)
                    )?,
                }
            }
            let failed = report.failures().count();
            writeln!(
                out,
                "{} of {} passed",
                report.results.len() - failed,
                report.results.len()
            )?;
            for e in ERRATA {
                writeln!(out, "erratum {}: {} -> {}", e.id, e.printed, e.corrected)?;
            }
        }
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFY })
}

fn run_fit(
    family: Family,
    samples: &[u64],
    degree: usize,
    holdout: &[u64],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, RunError> {
    let table = sample_counts(family, samples)?;
    let formula: ExactFamilyFormula = fit(&table, degree)?;
    let check = verify_formula(&formula, holdout)?;
    match format {
        Format::Json => write_json(
            out,
            &json!({ "formula": formula.to_json(), "holdout": check.to_json() }),
        )?,
        Format::Text => {
            writeln!(out, "{formula}")?;
            for x in &check.mismatches {
                writeln!(
                    out,
                    "mismatch m={} k={}: predicted {} observed {}",
                    x.m, x.k, x.predicted, x.observed
                )?;
            }
            writeln!(
                out,
                "holdout {:?}: {} ({} comparisons)",
                check.holdout,
                if check.pass() { "pass" } else { "FAIL" },
                check.comparisons
            )?;
        }
    }
    Ok(if check.pass() { EXIT_OK } else { EXIT_VERIFY })
}

/// Executes a validated configuration and returns the exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match config {
        RunConfig::Graph { command, input, format } => run_graph(*command, input, *format, out),
        RunConfig::Verify { m_range, format } => run_verify(m_range.clone(), *format, out),
        RunConfig::Fit {
            family,
            samples,
            degree,
            holdout,
            format,
        } => run_fit(*family, samples, *degree, holdout, *format, out),
    };
    match result.and_then(|code| out.flush().map(|_| code).map_err(RunError::from)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTE
        }
    }
}

/// Parses and runs; the whole program minus process plumbing.
pub fn main_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, out, err),
        Err(UsageError::Info(text)) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(UsageError::Invalid(msg)) => {
            let msg = msg.strip_prefix("error: ").unwrap_or(&msg);
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
