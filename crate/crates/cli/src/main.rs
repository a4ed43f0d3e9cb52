use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use qrz9::commands::{self, Globals, Method};
use qrz9::formats::write_json;
use qrz9::report::RunReport;
use qrz9::sweep::default_threads;

#[derive(Parser, Debug)]
#[command(name = "qrz9", version, about = "Cyclic and quadratic residue codes over Z9 + uZ9")]
struct Cli {
    /// Worker threads for pair sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest number of codeword pairs a sweep may visit without --full.
    #[arg(long, global = true, default_value_t = qrz9_core::engine::DEFAULT_SWEEP_BUDGET)]
    budget: u128,
    /// Seed for factorization and randomized checks.
    #[arg(long, global = true, default_value_t = qrz9_core::factor::DEFAULT_SEED)]
    seed: u64,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Record wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    /// Print sweep progress to stderr.
    #[arg(long, global = true)]
    progress: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor X^n - 1 over Z9 and list the primitive idempotents.
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate cyclic codes of length n; optionally search for self-dual ones.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        self_dual_search: bool,
    },
    /// Quadratic residue code family for a prime p.
    Qr {
        #[arg(long)]
        p: u64,
        /// Check the six listed properties.
        #[arg(long)]
        verify: bool,
        /// parity | matrix | matrix:<corner>,<constant> | all-ones
        #[arg(long)]
        extend: Option<String>,
        /// Decide whether the extended codes are self-dual.
        #[arg(long)]
        adjudicate_t7: bool,
    },
    /// Gray image and Lee weight of a vector, entries "a,b" separated by ';'.
    Gray {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Gray matrix "p,q,r,s".
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Hamming weight distribution of the Gray image of a code file.
    Wdist {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Force the convolution path (requires equal components).
        #[arg(long, conflicts_with = "sweep")]
        fast: bool,
        /// Force the pair sweep.
        #[arg(long)]
        sweep: bool,
        /// Lift the sweep budget.
        #[arg(long)]
        full: bool,
        /// Write the distribution to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long, default_value = "1")]
        threshold: String,
    },
    /// Audit a stored weight distribution.
    Audit {
        #[arg(long)]
        dist: PathBuf,
        /// |C| as a decimal integer.
        #[arg(long)]
        cardinality: String,
        /// Count weights 0..=t.
        #[arg(long)]
        t: usize,
        /// Largest allowed fraction, e.g. 2.8e-6 or 7/2500000.
        #[arg(long)]
        threshold: String,
    },
    /// Length-11 self-dual cyclic code and its length-22 distribution.
    Example1 {
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Compare the fast path with the sweep on small cyclic codes.
        #[arg(long)]
        sweep_check: bool,
    },
    /// p = 11 family, extended codes and the length-24 table.
    Example2 {
        /// Sweep the extended code (about 10 CPU-minutes per variant).
        #[arg(long)]
        full: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Every structural check in one run.
    VerifyAll {
        /// Corrupt one printed generator entry to exercise failure reporting.
        #[arg(long)]
        inject_fault: bool,
    },
}

fn run(cli: &Cli) -> Result<RunReport> {
    let g = Globals {
        threads: cli.threads.unwrap_or_else(default_threads).max(1),
        budget: cli.budget,
        seed: cli.seed,
        progress: cli.progress,
    };
    match &cli.command {
        Command::Factor { n } => commands::cmd_factor(&g, *n),
        Command::Cyclic { n, self_dual_search } => commands::cmd_cyclic(&g, *n, *self_dual_search),
        Command::Qr { p, verify, extend, adjudicate_t7 } => commands::cmd_qr(&g, *p, *verify, extend.as_deref(), *adjudicate_t7),
        Command::Gray { vector, matrix } => commands::cmd_gray(&g, vector, matrix.as_deref()),
        Command::Wdist { code, matrix, fast, sweep, full, out, t, threshold } => {
            let m = match (fast, sweep) {
                (true, _) => Method::Fast,
                (_, true) => Method::Sweep,
                _ => Method::Auto,
            };
            commands::cmd_wdist(&g, code, matrix.as_deref(), m, *full, out.as_deref(), *t, threshold)
        }
        Command::Audit { dist, cardinality, t, threshold } => commands::cmd_audit(&g, dist, cardinality, *t, threshold),
        Command::Example1 { matrix, sweep_check } => commands::cmd_example1(&g, matrix.as_deref(), *sweep_check),
        Command::Example2 { full, inject_fault } => commands::cmd_example2(&g, *full, *inject_fault),
        Command::VerifyAll { inject_fault } => commands::cmd_verify_all(&g, *inject_fault),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli).and_then(|mut report| {
        if cli.timing {
            report.timing_ms = Some(start.elapsed().as_millis());
        }
        let text = serde_json::to_string_pretty(&report)?;
        println!("{text}");
        if let Some(path) = &cli.json {
            write_json(path, &report).with_context(|| format!("writing report to {}", path.display()))?;
        }
        eprint!("{}", report.summary());
        Ok(report.exit_code())
    });
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
