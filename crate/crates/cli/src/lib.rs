//! `brouwer` command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a genuine FAIL record
//! exists, 2 for usage and parse errors.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod report;

use commands::{InputFormat, Output, Table};
use report::Style;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Verify(#[from] brouwer_core::VerifyError),
}

#[derive(Debug, Parser)]
#[command(name = "brouwer", version, about = "Laplacian-spectrum checks for Brouwer's conjecture")]
pub struct Cli {
    /// Emit JSON lines instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print floats with full round-trip precision instead of 6 significant digits.
    #[arg(long, global = true)]
    pub full_precision: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check S_k <= m + C(k+1, 2) for each graph in a file (stdin when omitted).
    Check {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        /// Only this k; all of 1..=n when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Evaluate every closed-form bound for (n, m) and one or all k.
    Bounds {
        n: usize,
        m: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Reproduce the k-interval tables.
    Tables {
        #[arg(value_enum)]
        which: Table,
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Override the m grid, e.g. `--m-list 100,250,400`.
        #[arg(long, value_delimiter = ',')]
        m_list: Option<Vec<usize>>,
    },
    /// Exhaustively check every labeled graph on n <= 7 vertices.
    Sweep {
        n: usize,
        #[arg(long, env = "WORKER_COUNT", default_value_t = 1)]
        workers: usize,
        /// Write the summary JSON here and failures to `<PATH>.failures.jsonl`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound and identity margins over seeded random G(n, m) graphs.
    Ensemble {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "WORKER_COUNT", default_value_t = 1)]
        workers: usize,
    },
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    match &cli.command {
        Command::Check { input, format, k } => {
            let text = match input {
                Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
                    .map_err(|source| CliError::Io { path: path.clone(), source })?,
                _ => {
                    let mut s = String::new();
                    stdin
                        .read_to_string(&mut s)
                        .map_err(|source| CliError::Io { path: PathBuf::from("<stdin>"), source })?;
                    s
                }
            };
            commands::cmd_check(&text, *format, *k)
        }
        Command::Bounds { n, m, k } => commands::cmd_bounds(*n, *m, *k),
        Command::Tables { which, n, m_list } => commands::cmd_tables(*which, *n, m_list.as_deref()),
        Command::Sweep { n, workers, out } => commands::cmd_sweep(*n, *workers, out.as_deref()),
        Command::Ensemble {
            n,
            m,
            count,
            seed,
            workers,
        } => commands::cmd_ensemble(*n, *m, *count, *seed, *workers),
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let style = Style {
        json: cli.json,
        full_precision: cli.full_precision,
    };
    match execute(cli, stdin) {
        Ok(output) => {
            for line in &output.diagnostics {
                let _ = writeln!(stderr, "{line}");
            }
            if stdout.write_all(output.report.render(style).as_bytes()).is_err() {
                return 2;
            }
            u8::from(output.failed)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Parses `args` (program name first) and runs; clap errors map to exit 2.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            code
        }
    }
}
