//! Argument parsing, output plumbing and the exit-code contract.

mod commands;
mod config;

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use cliflat::Error;
use config::{CliConfig, Overrides};

/// A bad invocation or unreadable input: exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Usage(pub String);

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    /// A violated identity or nonzero residual; the artifact is still written.
    Math(String),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Usage;

    fn from_str(s: &str) -> Result<Self, Usage> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Usage(format!("unknown format `{other}` (expected json, csv or text)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cliflat",
    version,
    about = "Exact Clifford operator calculus on the lattice hZ^n"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand. Numbers are exact: `3`, `-1/2`.
#[derive(Debug, Args)]
struct Common {
    /// File of `key=value` lines (keys: n, h, mu, b, degree, seed, format, output)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Dimension n [default: 2]
    #[arg(long, global = true)]
    n: Option<String>,
    /// Lattice spacing h [default: 1]
    #[arg(long, global = true, allow_hyphen_values = true)]
    h: Option<String>,
    /// Slope of the weight w(t) = mu*t + b [default: 1]
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Offset of the weight w(t) = mu*t + b [default: 0]
    #[arg(long, global = true, allow_hyphen_values = true)]
    b: Option<String>,
    /// Degree bound of the verification basis [default: 4]
    #[arg(long, global = true)]
    degree: Option<String>,
    /// Seed for the random test polynomials [default: 0]
    #[arg(long, global = true)]
    seed: Option<String>,
    /// Output format: json, csv or text (default depends on the command)
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write the artifact here instead of stdout
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check registered identities and write a report
    Verify {
        /// Comma-separated relation ids, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Tabulate gamma_s (or the Casimir eigenvalue) with a consistency column
    Gamma {
        /// Largest s [default: 20 for gamma, 6 for casimir]
        #[arg(long)]
        s_max: Option<String>,
        /// Largest n [default: 5 for gamma, 3 for casimir]
        #[arg(long)]
        n_max: Option<String>,
        /// Which table: gamma or casimir
        #[arg(long, default_value = "gamma")]
        table: String,
    },
    /// Normalized Appell sequence m_0..m_s
    Appell {
        #[arg(long, default_value = "4")]
        s: String,
        /// `+` or `-`
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Ladder w_0..w_s with its lowering constants and Casimir values
    Ladder {
        #[arg(long, default_value = "4")]
        s: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Split a polynomial into components W^r q with q a joint eigenvector
    Decompose {
        /// Polynomial JSON file
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Evolve a polynomial under exp(t(E^- - E^+)) and check the Cauchy problem
    Evolve {
        /// Polynomial JSON file
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// List relation ids with their descriptions
    ListRelations,
}

fn parse_sign(s: &str) -> Result<cliflat::Sign, Usage> {
    match s {
        "plus" => Ok(cliflat::Sign::Plus),
        "minus" => Ok(cliflat::Sign::Minus),
        _ => cliflat::Sign::parse(s).ok_or_else(|| Usage(format!("unknown sign `{s}` (expected + or -)"))),
    }
}

/// Caps the global thread pool from `CLIFLAT_THREADS`.
fn configure_threads() -> Result<(), Usage> {
    let Ok(raw) = std::env::var("CLIFLAT_THREADS") else {
        return Ok(());
    };
    let k = config::parse_count(&raw)
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| Usage(format!("CLIFLAT_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k as usize)
        .build_global()
        .map_err(|e| Usage(format!("cannot configure thread pool: {e}")))
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), Usage> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let fail = |e: std::io::Error| Usage(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(bytes).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

fn emit(cfg: &CliConfig, text: &str) -> Result<(), Usage> {
    match &cfg.output {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Usage(format!("cannot write stdout: {e}")))
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let c = cli.common;
    let flags = Overrides {
        n: c.n,
        h: c.h,
        mu: c.mu,
        b: c.b,
        degree: c.degree,
        seed: c.seed,
        format: c.format,
        output: c.output,
    };
    let cfg = CliConfig::resolve(c.config.as_deref(), &flags)?;
    configure_threads()?;
    let artifact = match cli.command {
        Command::Verify { suite } => commands::verify(&cfg, &suite)?,
        Command::Gamma { s_max, n_max, table } => commands::gamma(&cfg, s_max.as_deref(), n_max.as_deref(), &table)?,
        Command::Appell { s, sign } => commands::appell(&cfg, config::parse_count(&s)? as u32, parse_sign(&sign)?)?,
        Command::Ladder { s, sign } => commands::ladder(&cfg, config::parse_count(&s)? as u32, parse_sign(&sign)?)?,
        Command::Decompose { input, sign } => commands::decompose(&cfg, &input, parse_sign(&sign)?)?,
        Command::Evolve { input, t } => commands::evolve(&cfg, &input, &t)?,
        Command::ListRelations => commands::list_relations(&cfg)?,
    };
    emit(&cfg, &artifact.text)?;
    match artifact.failure {
        Some(msg) => Err(Failure::Math(msg)),
        None => Ok(()),
    }
}

/// Parses `std::env::args`, runs the command and maps the outcome to
/// 0 (success), 1 (mathematical failure) or 2 (usage or input error).
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("cliflat: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("cliflat: {msg}");
            eprintln!("run `cliflat --help` for usage");
            ExitCode::from(2)
        }
    }
}
