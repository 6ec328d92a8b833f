use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use qaw_cli::poly::{run_poly, Family, PolyRequest};
use qaw_cli::suites::{parse_seeds, parse_suites, run_verify, RunOptions};
use qaw_core::Rat;
use qaw_core::DEFAULT_N_MAX;

/// Exact verification of q-shift operator identities and q-Jacobi
/// polynomial constructions at seeded rational parameter points.
#[derive(Parser)]
#[command(name = "qaw", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a JSON report.
    Verify(VerifyArgs),
    /// Evaluate one polynomial family member exactly.
    Poly(PolyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or comma-separated suites: uqsl2, aw, equitable, little, big, tridiag
    #[arg(long)]
    suite: Option<String>,
    /// Comma-separated seed list
    #[arg(long, conflicts_with = "points")]
    seeds: Option<String>,
    /// Shorthand for seeds 1..=N
    #[arg(long)]
    points: Option<u64>,
    /// Degree cap for polynomial-family checks
    #[arg(long)]
    n_max: Option<u32>,
    /// Report path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML file mirroring these flags (command line takes precedence)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Corrupt one tridiagonalization coefficient; the run must then fail
    #[arg(long, hide = true)]
    corrupt_tridiag: bool,
}

/// Optional config file; keys mirror the verify flags.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    suite: Option<String>,
    seeds: Option<Vec<u64>>,
    points: Option<u64>,
    n_max: Option<u32>,
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    /// little or big_rescaled
    #[arg(long)]
    family: String,
    /// Degree
    #[arg(long)]
    n: u32,
    /// Parameter 𝔞 as a rational, e.g. 1/3
    #[arg(long)]
    pa: String,
    /// Parameter 𝔟
    #[arg(long)]
    pb: String,
    /// Parameter 𝔠 (big_rescaled only)
    #[arg(long)]
    pc: Option<String>,
    /// Primitive parameter t with q = t²
    #[arg(long)]
    t: String,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(out: Option<&PathBuf>, body: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let config: FileConfig = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => FileConfig::default(),
    };
    let suites = match args.suite.as_deref().or(config.suite.as_deref()) {
        Some(s) => parse_suites(s).map_err(anyhow::Error::msg)?,
        None => parse_suites("all").unwrap(),
    };
    let seeds = if let Some(s) = &args.seeds {
        parse_seeds(s).map_err(anyhow::Error::msg)?
    } else if let Some(n) = args.points {
        anyhow::ensure!(n > 0, "--points must be positive");
        (1..=n).collect()
    } else if let Some(s) = &config.seeds {
        anyhow::ensure!(!s.is_empty(), "config seed list is empty");
        s.clone()
    } else if let Some(n) = config.points {
        anyhow::ensure!(n > 0, "config points must be positive");
        (1..=n).collect()
    } else {
        vec![1, 2, 3]
    };
    let opts = RunOptions {
        suites,
        seeds,
        n_max: args.n_max.or(config.n_max).unwrap_or(DEFAULT_N_MAX),
        corrupt_tridiag: args.corrupt_tridiag,
    };
    let doc = run_verify(&opts);
    let body = serde_json::to_string_pretty(&doc).context("serializing report")? + "\n";
    emit(args.out.as_ref().or(config.out.as_ref()), &body)?;
    Ok(doc.all_pass())
}

fn cmd_poly(args: &PolyArgs) -> Result<()> {
    let parse_rat = |name: &str, s: &str| -> Result<Rat> {
        Rat::from_str(s).map_err(|e| anyhow::anyhow!("--{name}: {e}"))
    };
    let req = PolyRequest {
        family: Family::from_str(&args.family).map_err(anyhow::Error::msg)?,
        n: args.n,
        a: parse_rat("pa", &args.pa)?,
        b: parse_rat("pb", &args.pb)?,
        c: args.pc.as_deref().map(|s| parse_rat("pc", s)).transpose()?,
        t: parse_rat("t", &args.t)?,
    };
    let output = run_poly(&req).map_err(anyhow::Error::msg)?;
    let body = serde_json::to_string_pretty(&output).context("serializing output")? + "\n";
    emit(args.out.as_ref(), &body)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => match cmd_verify(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Command::Poly(args) => match cmd_poly(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}
