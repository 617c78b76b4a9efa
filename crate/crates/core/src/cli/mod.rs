//! The `qident` command line: argument parsing, config loading and the
//! four subcommands. [`run`] returns the process exit code.

mod expand;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use expand::{format_expansion, hsym_builtin, parse_monomial};
pub use report::{Report, Summary};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::divisor::DivisorTable;
use crate::identities::{verify_suite, Identity, OutputFormat, SuiteConfig};

/// Exit code for usage and domain errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read config {path}: {source}")]
    ConfigIo { path: PathBuf, source: std::io::Error },
    #[error("invalid config {path}: {message}")]
    ConfigParse { path: PathBuf, message: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] crate::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "qident",
    version,
    about = "Exact q-series expansions and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify identities over index ranges and sampled parameters.
    Verify(VerifyArgs),
    /// Print q-expansion coefficients of a builtin expression.
    Expand(ExpandArgs),
    /// Print the coefficients of the Gaussian binomial [n, k].
    #[command(allow_negative_numbers = true)]
    Gaussian { n: i64, k: i64 },
    /// Print n, sigma_0(n), sigma_1(n) for n = 1..=max.
    Divisors {
        #[arg(long)]
        max: i64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity to verify (repeatable).
    #[arg(long = "identity", value_name = "NAME")]
    identities: Vec<Identity>,
    /// Verify every identity.
    #[arg(long, conflicts_with = "identities")]
    all: bool,
    #[arg(long)]
    n_max: Option<i64>,
    #[arg(long)]
    m_max: Option<i64>,
    #[arg(long)]
    tau_max: Option<i64>,
    /// Parameter samples per index cell.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Also prove the first-index identity on its full interpolation grid.
    #[arg(long)]
    grid_proof: bool,
    /// Emit the JSON report.
    #[arg(long)]
    json: bool,
    /// TOML file with SuiteConfig keys; flags override it.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, hide = true)]
    mutate: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Builtin {
    /// h_m(q^k/(1 - z q^k), k = i..n)
    Hsym,
    /// A_i(z) for the given n, m
    #[value(name = "a_coeff")]
    ACoeff,
    /// Gaussian binomial [n, k]
    Gaussian,
    /// (x)_n
    Pochhammer,
}

#[derive(Debug, Args)]
struct ExpandArgs {
    builtin: Builtin,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    z: Option<Rational>,
    /// Monomial `c*q^k` for pochhammer.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Highest power of q to print.
    #[arg(long)]
    order: usize,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("'{s}' is not a rational p or p/r"))
}

/// Reads a TOML `SuiteConfig`.
pub fn load_config(path: &Path) -> Result<SuiteConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::ConfigIo {
        path: path.to_path_buf(),
        source,
    })?;
    toml::from_str(&text).map_err(|e| CliError::ConfigParse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Parses a TOML `SuiteConfig` held in memory.
pub fn parse_config(text: &str) -> Result<SuiteConfig, CliError> {
    toml::from_str(text).map_err(|e| CliError::Invalid(e.to_string()))
}

/// Checks the config invariants: at least one sample and nonempty ranges
/// for the indices the chosen identities use.
pub fn validate_config(cfg: &SuiteConfig) -> Result<(), CliError> {
    if cfg.samples == 0 {
        return Err(CliError::Invalid("samples must be at least 1".into()));
    }
    let uses = |ids: &[Identity]| cfg.identities.iter().any(|id| ids.contains(id));
    if !cfg.identities.is_empty() && cfg.n_range.is_empty() {
        return Err(CliError::Invalid("n_range is empty".into()));
    }
    let with_m = [
        Identity::MasterFirstIndex,
        Identity::XPoly,
        Identity::XCoeff,
        Identity::Dilcher,
        Identity::XPolyUnitZ,
    ];
    if uses(&with_m) && cfg.m_range.is_empty() {
        return Err(CliError::Invalid("m_range is empty".into()));
    }
    let with_tau = [
        Identity::HsymOracle,
        Identity::PartialFraction,
        Identity::PoleSum,
        Identity::Master,
    ];
    if uses(&with_tau) && cfg.tau_range.is_empty() {
        return Err(CliError::Invalid("tau_range is empty".into()));
    }
    Ok(())
}

fn suite_config(args: &VerifyArgs) -> Result<SuiteConfig, CliError> {
    let mut cfg = match &args.config {
        Some(path) => load_config(path)?,
        None => SuiteConfig::default(),
    };
    if args.all {
        cfg.identities = Identity::ALL.to_vec();
    } else if !args.identities.is_empty() {
        cfg.identities = args.identities.clone();
    }
    if let Some(n) = args.n_max {
        cfg.n_range.hi = n;
    }
    if let Some(m) = args.m_max {
        cfg.m_range.hi = m;
    }
    if let Some(t) = args.tau_max {
        cfg.tau_range.hi = t;
    }
    if let Some(s) = args.samples {
        cfg.samples = s;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    cfg.grid_proof |= args.grid_proof;
    if args.json {
        cfg.output = OutputFormat::Json;
    }
    cfg.mutate = args.mutate;
    validate_config(&cfg)?;
    Ok(cfg)
}

/// Runs the suite and builds the report.
pub fn cmd_verify(cfg: SuiteConfig) -> Report {
    let start = Instant::now();
    let results = verify_suite(&cfg);
    let ms = start.elapsed().as_millis() as u64;
    Report::new(cfg, results, ms)
}

fn cmd_expand(args: &ExpandArgs) -> Result<String, CliError> {
    let need =
        |v: Option<i64>, flag: &str| v.ok_or_else(|| CliError::Invalid(format!("{flag} is required for this builtin")));
    let f = match args.builtin {
        Builtin::Hsym => {
            let z = args.z.clone().unwrap_or_else(num_traits::One::one);
            hsym_builtin(need(args.m, "--m")?, need(args.n, "--n")?, &z, args.i.unwrap_or(1))?
        }
        Builtin::ACoeff => {
            let z = args
                .z
                .clone()
                .ok_or_else(|| CliError::Invalid("--z is required for a_coeff".into()))?;
            expand::a_coeff_builtin(&z, need(args.i, "--i")?, need(args.n, "--n")?, need(args.m, "--m")?)?
        }
        Builtin::Gaussian => expand::gaussian_builtin(need(args.n, "--n")?, need(args.k, "--k")?)?,
        Builtin::Pochhammer => {
            let x = args.x.as_deref().unwrap_or("q");
            expand::pochhammer_builtin(&parse_monomial(x)?, need(args.n, "--n")?)?
        }
    };
    Ok(format_expansion(&f, args.order)?)
}

fn cmd_gaussian(n: i64, k: i64) -> Result<String, CliError> {
    let p = crate::qseries::gauss_binomial(n, k)?;
    if p.is_zero() {
        return Ok("0".into());
    }
    Ok(p.coeffs().iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

fn cmd_divisors(max: i64) -> Result<String, CliError> {
    let table = DivisorTable::new(max)?;
    Ok(table.rows().map(|(n, s0, s1)| format!("{n} {s0} {s1}\n")).collect())
}

/// Parses `args` (including the program name), runs the command, writes to
/// `out`/`err` and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(args) => suite_config(args).map(|cfg| {
            let report = cmd_verify(cfg);
            let text = match report.config.output {
                OutputFormat::Json => report.to_json() + "\n",
                OutputFormat::Text => report.to_text(),
            };
            (text, report.exit_code())
        }),
        Command::Expand(args) => cmd_expand(args).map(|s| (s + "\n", 0)),
        Command::Gaussian { n, k } => cmd_gaussian(*n, *k).map(|s| (s + "\n", 0)),
        Command::Divisors { max } => cmd_divisors(*max).map(|s| (s, 0)),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point used by the `qident` binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
