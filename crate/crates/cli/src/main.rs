//! `hypfib`: exact invariants, genus bounds, index enumeration and example
//! certificates for hyperelliptic fibrations.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! and 2 on any error. Errors are written to stderr as one JSON object.

mod args;
mod commands;
mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use crate::args::CliError;
use crate::render::Format;

/// Worker threads for parallel searches; defaults to the number of cores.
pub const WORKERS_ENV: &str = "HYPFIB_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "hypfib", version, about = "Exact arithmetic for hyperelliptic fibrations")]
struct Cli {
    #[command(subcommand)]
    cmd: commands::Command,

    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Add display-only decimal approximations (never authoritative).
    #[arg(long, global = true)]
    decimal: bool,

    /// Write to a file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
}

/// Options every command sees.
#[derive(Clone, Copy, Debug)]
pub struct Opts {
    pub decimal: bool,
}

fn emit_error(e: &CliError) -> ExitCode {
    let doc = json!({ "error": { "kind": e.kind, "message": e.message } });
    eprintln!("{doc}");
    ExitCode::from(2)
}

fn configure_workers() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::usage(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::new("internal", e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return emit_error(&CliError::usage(e.to_string().trim().to_string())),
    };
    if let Err(e) = configure_workers() {
        return emit_error(&e);
    }
    let opts = Opts { decimal: cli.decimal };
    let outcome = match commands::run(&cli.cmd, opts) {
        Ok(o) => o,
        Err(e) => return emit_error(&e),
    };
    let text = outcome.output.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(CliError::from),
    };
    if let Err(e) = written {
        return emit_error(&e);
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
