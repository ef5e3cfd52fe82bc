//! Argument parsing and dispatch for the `cycgroups` binary.
//!
//! Exit codes: 0 when everything requested passes, 1 when a verification or
//! consistency check fails, 2 for usage errors and rejected input.

use std::ffi::OsString;

use clap::{ArgGroup, Parser, Subcommand};
use cycgroups_core::exclusion::classify_candidates;
use cycgroups_core::{census, enumerate_candidates, Signature};

use crate::catalog::Catalog;
use crate::error::Result;
use crate::expr::parse_group;
use crate::render::{self, Format};
use crate::verify::{catalog_search, explore, verify_all, verify_theorem};

#[derive(Debug, Parser)]
#[command(
    name = "cycgroups",
    version,
    about = "Count cyclic subgroups and check the small-deficiency classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Census of one group, e.g. `D8 x C2` or `sd(C3 x C3, C2, inv)`.
    Analyze {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Signatures allowed by the counting identity for a deficiency.
    Candidates {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Candidates, exclusion table and revised table for a deficiency.
    Exclude {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check one classification theorem, or everything.
    #[command(group(ArgGroup::new("which").required(true).args(["delta", "all"])))]
    Verify {
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search the bundled catalog of groups up to order 24.
    Catalog {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        delta: Option<usize>,
        /// Comma-separated signature such as `4,4,4`.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Surviving signatures for a deficiency, with catalog witnesses.
    Explore {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// What one invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Self {
            code: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text, true)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(command: Command) -> Result<Outcome> {
    let catalog = Catalog::bundled;
    Ok(match command {
        Command::Analyze { expr, format } => {
            let group = parse_group(&expr)?;
            Outcome::ok(
                render::census_report(expr.trim(), &census(&group), format)?,
                true,
            )
        }
        Command::Candidates { delta, format } => Outcome::ok(
            render::candidates(delta, &enumerate_candidates(delta)?, format)?,
            true,
        ),
        Command::Exclude { delta, format } => Outcome::ok(
            render::exclusion(delta, &classify_candidates(delta)?, format)?,
            true,
        ),
        Command::Verify { delta, format, .. } => {
            let report = match delta {
                Some(d) => verify_theorem(d, catalog())?,
                None => verify_all(catalog())?,
            };
            let mut outcome = Outcome::ok(render::verification(&report, format)?, report.pass);
            for line in report.failures() {
                outcome.stderr.push_str(&line);
                outcome.stderr.push('\n');
            }
            outcome
        }
        Command::Catalog {
            max_order,
            delta,
            sigma,
            format,
        } => {
            let sigma: Option<Signature> = sigma.map(|s| s.parse()).transpose()?;
            let rows = catalog_search(catalog(), max_order, delta, sigma.as_ref())?;
            Outcome::ok(render::search(&rows, format)?, true)
        }
        Command::Explore { delta, format } => {
            let expl = explore(delta, catalog())?;
            Outcome::ok(render::exploration(&expl, format)?, expl.consistent)
        }
    })
}
