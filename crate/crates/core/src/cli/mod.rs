//! Command-line front end of the `liouspec` binary.
//!
//! Exit codes: 0 on success, 1 for configuration errors, 2 for numerical
//! failures (including a run in which every grid point failed).

pub mod commands;
pub mod config;
pub mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use config::{Format, RunConfig};
use output::OutputSet;

#[derive(Debug, Parser)]
#[command(
    name = "liouspec",
    version,
    about = "Liouvillian spectra of driven-dissipative bosonic modes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// TOML run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory (default: `output.path` of the config, else `liouspec-out`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel loops.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Reserved; all algorithms are deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Full labelled spectrum of one model.
    Spectrum,
    /// Observables over a parameter grid.
    Sweep,
    /// Finite-size analysis of a dissipative phase transition.
    Qpt,
    /// Relaxation time over an (eta, xi) grid.
    Relaxation,
    /// Quasi-spin classification of all dyads for a given j.
    Classify,
    /// Truncation convergence search.
    Converge,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Sweep => "sweep",
            Command::Qpt => "qpt",
            Command::Relaxation => "relaxation",
            Command::Classify => "classify",
            Command::Converge => "converge",
        }
    }
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config { .. }
        | Error::InvalidParameter { .. }
        | Error::OutOfRange(_)
        | Error::RuleInapplicable { .. } => 1,
        _ => 2,
    }
}

/// Runs a parsed command line and returns the manifest path.
pub fn run(cli: &Cli) -> Result<PathBuf> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| Error::config("--config", "a configuration file is required"))?;
    let cfg = RunConfig::load(path)?;
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::config("--workers", "must be at least 1"));
        }
        // a pool may already exist when called repeatedly in-process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    faer::set_global_parallelism(faer::Par::Seq);

    let outcome = match cli.command {
        Command::Spectrum => commands::spectrum_cmd(&cfg),
        Command::Sweep => commands::sweep_cmd(&cfg),
        Command::Qpt => commands::qpt_cmd(&cfg),
        Command::Relaxation => commands::relaxation_cmd(&cfg),
        Command::Classify => commands::classify_cmd(&cfg),
        Command::Converge => commands::converge_cmd(&cfg),
    }?;

    let format = cli.format.or(cfg.output.format).unwrap_or_default();
    let dir = cli
        .out
        .clone()
        .or_else(|| cfg.output.path.clone().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("liouspec-out"));
    let header = json!({
        "subcommand": cli.command.name(),
        "input": cfg,
        "resolved": outcome.resolved,
        "seed": cli.seed,
    });
    let mut out = OutputSet::create(&dir, format, header)?;
    for t in &outcome.tables {
        out.write(t)?;
    }
    let manifest = out.finish(cli.command.name(), outcome.summary)?;
    if outcome.all_failed {
        return Err(Error::Numerical(format!(
            "every evaluation failed; see the error columns in {}",
            dir.display()
        )));
    }
    Ok(manifest)
}

/// Entry point of the binary: parses `args`, runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(manifest) => {
            println!("wrote {}", manifest.display());
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
