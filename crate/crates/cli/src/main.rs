//! `coxcanon`: graded dimensions, canonical modules and freeness verdicts
//! for multi-section rings described in JSON.

mod job;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxcanon::Error;

use crate::job::JobSpec;
use crate::report::{Context, Report};

#[derive(Parser)]
#[command(name = "coxcanon", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cl(X), the classes of the divisors, and Cl(R).
    Classgroup(Common),
    /// Table of dim R_n.
    Sections(Common),
    /// Table of dim (omega_R)_n.
    Canonical(Common),
    /// Whether omega_R is free, and the degree of its generator.
    Freeness(Common),
    /// Compare omega of a sublattice ring with the restriction of omega_R.
    Restrict(Common),
    /// Top local cohomology against the closed-form cohomology oracle.
    Duality(Common),
    /// Search for n != 0 with R_n and R_-n both nonzero.
    Probe(Common),
    /// Regenerate the worked example tables (no input needed).
    Examples(Common),
}

#[derive(Args)]
struct Common {
    /// Job description (JSON).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Degree box, `lo:hi` per axis (one range applies to every axis).
    #[arg(long = "box", allow_hyphen_values = true)]
    degree_box: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Sublattice basis in degree coordinates, e.g. `1,0;0,1`.
    #[arg(long)]
    sublattice: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit status 2.
    Input(String),
    /// A mathematical precondition failed: exit status 3.
    Math(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFan(_)
            | Error::InvalidPointConfig(_)
            | Error::InvalidDivisor(_)
            | Error::DimensionMismatch { .. }
            | Error::NoDivisors => CliError::Input(e.to_string()),
            other => CliError::Math(other),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Math(e) => write!(f, "precondition failed: {e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn parse_box(s: &str) -> Result<Vec<(i64, i64)>, CliError> {
    s.split(',')
        .map(|part| {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("bad range {part:?}, expected lo:hi")))?;
            let p = |x: &str| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Input(format!("bad bound {x:?}")))
            };
            Ok((p(lo)?, p(hi)?))
        })
        .collect()
}

fn parse_sublattice(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::Input(format!("bad sublattice entry {x:?}")))
                })
                .collect()
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render(report: Report, format: Format) -> Result<String, CliError> {
    match (report, format) {
        (Report::Json(v), Format::Json) | (Report::Table { json: v, .. }, Format::Json) => {
            let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
            s.push('\n');
            Ok(s)
        }
        (Report::Table { header, rows, .. }, Format::Csv) => {
            let mut s = header.join(",");
            s.push('\n');
            for row in rows {
                s.push_str(&row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
                s.push('\n');
            }
            Ok(s)
        }
        (Report::Json(_), Format::Csv) => Err(CliError::Input(
            "CSV output is only available for table reports".into(),
        )),
    }
}

type Body = fn(&Context) -> Result<Report, CliError>;

fn run(cli: Cli) -> Result<(), CliError> {
    let (args, body): (&Common, Body) = match &cli.command {
        Command::Classgroup(a) => (a, report::classgroup),
        Command::Sections(a) => (a, report::sections),
        Command::Canonical(a) => (a, report::canonical),
        Command::Freeness(a) => (a, report::freeness),
        Command::Restrict(a) => (a, report::restrict),
        Command::Duality(a) => (a, report::duality),
        Command::Probe(a) => (a, report::probe),
        Command::Examples(a) => (a, report::examples),
    };
    let job = match (&args.input, &cli.command) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            JobSpec::parse(&text)?
        }
        (None, Command::Examples(_)) => {
            JobSpec::parse(r#"{"variety": {"builtin": {"name": "p1_product", "k": 2}}}"#)?
        }
        (None, _) => return Err(CliError::Input("--input is required".into())),
    };
    let ctx = Context {
        job,
        degree_box: args.degree_box.as_deref().map(parse_box).transpose()?,
        sublattice: args.sublattice.as_deref().map(parse_sublattice).transpose()?,
    };
    let text = render(body(&ctx)?, args.format)?;
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(CliError::Io),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("coxcanon: {e}");
            ExitCode::from(match e {
                CliError::Input(_) => 2,
                CliError::Math(_) => 3,
                CliError::Io(_) => 1,
            })
        }
    }
}
