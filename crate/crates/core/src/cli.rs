//! Command-line interface.

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::counting::{plex_count, plex_polynomial};
use crate::cycle_index::{cycle_index_subset_action, unmerged_subset_action};
use crate::partitions::binomial_usize;
use crate::render::{self, Format, Label, Variable};
use crate::verify::{self, Scope};

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "PLEXES_THREADS";

pub const DEFAULT_LIMIT: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "plexes",
    version,
    about = "Cycle indices of S_p on r-subsets and counts of n-plexes"
)]
pub struct Cli {
    /// Largest number of points accepted by any command.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    pub limit: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cycle index of S_p acting on r-element subsets.
    CycleIndex {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// One term per partition of p, labelled with its source partition.
        #[arg(long)]
        unmerged: bool,
        /// Variable letter (a as in a_k, or y).
        #[arg(long, value_enum, default_value_t)]
        var: Variable,
    },
    /// Counting polynomial s_p^n(x) of n-plexes on p points.
    Poly {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of n-plexes on p points.
    Count {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
    },
    /// Grid of counts for p = 1..max-p and n = 1..max-n.
    Table {
        #[arg(long, default_value_t = 9)]
        max_p: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare against the embedded reference values and the brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value_t)]
        scope: Scope,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct UsageError(pub String);

/// Output text and process exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }
}

fn check_points(p: usize, limit: usize) -> Result<(), UsageError> {
    if p == 0 {
        return Err(UsageError("p must be at least 1".into()));
    }
    if p > limit {
        return Err(UsageError(format!(
            "p = {p} exceeds the limit {limit}; raise it with --limit"
        )));
    }
    Ok(())
}

fn check_n(n: usize) -> Result<(), UsageError> {
    if n == 0 {
        return Err(UsageError("n must be at least 1".into()));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    match cli.command {
        Command::CycleIndex {
            p,
            r,
            format,
            unmerged,
            var,
        } => {
            check_points(p, cli.limit)?;
            if r == 0 || r > p {
                return Err(UsageError(format!("r must satisfy 1 <= r <= p = {p}")));
            }
            let label = Label { p, r };
            let text = if unmerged {
                let terms = unmerged_subset_action(p, r);
                match format {
                    Format::Plain => render::plain_unmerged(&terms, label, var),
                    Format::Latex => render::latex_unmerged(&terms, label, var),
                    Format::JsonLike => {
                        render::structured_unmerged(&terms, label, binomial_usize(p, r))
                    }
                }
            } else {
                let z = cycle_index_subset_action(p, r);
                match format {
                    Format::Plain => render::plain(&z, label, var),
                    Format::Latex => render::latex(&z, label, var),
                    Format::JsonLike => render::structured(&z, label),
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Poly { p, n, format } => {
            check_points(p, cli.limit)?;
            check_n(n)?;
            Ok(Outcome::ok(render::polynomial(
                &plex_polynomial(p, n),
                p,
                n,
                format,
            )))
        }
        Command::Count { p, n } => {
            check_points(p, cli.limit)?;
            check_n(n)?;
            Ok(Outcome::ok(format!("{}\n", plex_count(p, n))))
        }
        Command::Table {
            max_p,
            max_n,
            format,
        } => {
            check_points(max_p, cli.limit)?;
            check_n(max_n)?;
            let rows: Vec<Vec<_>> = (1..=max_p)
                .map(|p| (1..=max_n).map(|n| plex_count(p, n)).collect())
                .collect();
            Ok(Outcome::ok(render::table(&rows, format)))
        }
        Command::Verify { scope } => {
            let report = verify::run(scope);
            Ok(Outcome {
                status: if report.passed() { 0 } else { 1 },
                output: report.to_string(),
            })
        }
    }
}
