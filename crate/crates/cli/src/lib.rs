//! Command-line front end for `gamma-core`.
//!
//! [`run`] parses argv, writes the payload to `out` and diagnostics to
//! `err`, and returns the exit status: 0 on success, 1 on usage or argument
//! errors, 2 when a verification suite fails.

pub mod commands;
pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use commands::Rendered;
use verify::SuiteReport;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Figures,
    Oracles,
    Theorems,
    Gamma,
}

#[derive(Debug, Parser)]
#[command(name = "gamma", version, about = "Minimal generators, Betti numbers and Poincaré series of the truncations Γ_n")]
pub struct Cli {
    /// Output format; csv is available for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of I_n by ascending weight.
    Gens {
        n: u64,
        /// Use the brute-force weight filter instead of the integer scan.
        #[arg(long)]
        brute: bool,
    },
    /// C_n and C_{n,v} for n = 2..=nmax, or C_{n,v,d} with --graded.
    Counts {
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        graded: bool,
    },
    /// Hilbert series of A_n in t, or in (t, u) with --bigraded.
    Hilbert {
        n: u64,
        #[arg(long)]
        bigraded: bool,
    },
    /// Betti numbers β_0.. of I_n.
    Betti { n: u64 },
    /// Poincaré series of K over A_n (default) or of I_n over S (--ideal).
    Poincare {
        n: u64,
        #[arg(long)]
        graded: bool,
        #[arg(long, conflicts_with = "residue")]
        ideal: bool,
        #[arg(long)]
        residue: bool,
    },
    /// Checks the conjectured shape of the Poincaré series for n = 2..=nmax.
    Conjecture {
        #[arg(long)]
        nmax: u64,
    },
    /// Runs a verification suite; exits with 2 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long)]
        qmax: Option<usize>,
        /// Rank every bar complex modulo a random prime.
        #[arg(long)]
        modular: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub n_range: [u64; 2],
    pub format: Format,
    pub version: String,
    pub payload: Value,
}

struct Outcome {
    rendered: Rendered,
    n_range: [u64; 2],
    failed: bool,
}

fn suite_outcome(report: SuiteReport, n_range: [u64; 2], err: &mut dyn Write) -> Outcome {
    for c in &report.checks {
        let _ = writeln!(err, "{:>10.2?}  {}", c.elapsed, c.name);
    }
    Outcome {
        failed: !report.passed(),
        rendered: Rendered {
            text: report.render_text(),
            csv: None,
            json: serde_json::to_value(&report).expect("plain data"),
        },
        n_range,
    }
}

fn execute(cmd: &Command, err: &mut dyn Write) -> gamma_core::Result<Outcome> {
    let ok = |rendered, lo, hi| Outcome { rendered, n_range: [lo, hi], failed: false };
    Ok(match *cmd {
        Command::Gens { n, brute } => ok(commands::gens(n, brute)?, n, n),
        Command::Counts { nmax, graded } => ok(commands::counts(nmax, graded)?, 2, nmax),
        Command::Hilbert { n, bigraded } => ok(commands::hilbert(n, bigraded)?, n, n),
        Command::Betti { n } => ok(commands::betti(n)?, n, n),
        Command::Poincare { n, graded, ideal, .. } => ok(commands::poincare(n, graded, ideal)?, n, n),
        Command::Conjecture { nmax } => ok(commands::conjecture(nmax)?, 2, nmax),
        Command::Verify { suite, nmax, qmax, modular, seed } => {
            let (report, hi) = match suite {
                Suite::Figures => (verify::figures(), 30),
                Suite::Oracles => {
                    let hi = nmax.unwrap_or(10);
                    let q = qmax.unwrap_or(4);
                    commands::check_level(hi)?;
                    verify::check_bar_budget(hi, q)?;
                    (verify::oracles(hi, q, modular, seed), hi)
                }
                Suite::Theorems => {
                    let hi = nmax.unwrap_or(500);
                    commands::check_level(hi)?;
                    (verify::theorems(hi), hi)
                }
                Suite::Gamma => (verify::gamma(seed), 200),
            };
            suite_outcome(report, [2, hi], err)
        }
    })
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 1 };
        }
    };
    let outcome = match execute(&cli.command, err) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let body = match cli.format {
        Format::Text => outcome.rendered.text,
        Format::Csv => match outcome.rendered.csv {
            Some(csv) => csv,
            None => {
                let _ = writeln!(err, "error: csv output is not available for this command");
                return 1;
            }
        },
        Format::Json => {
            let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
            let record = OutputRecord {
                command: echo.join(" "),
                n_range: outcome.n_range,
                format: Format::Json,
                version: VERSION.to_string(),
                payload: outcome.rendered.json,
            };
            serde_json::to_string_pretty(&record).expect("plain data") + "\n"
        }
    };
    if out.write_all(body.as_bytes()).is_err() {
        return 1;
    }
    if outcome.failed {
        2
    } else {
        0
    }
}
