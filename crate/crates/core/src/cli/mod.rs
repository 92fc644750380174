//! The `fpdim` command line: JSON ring specs in, sorted-key JSON reports
//! out.
//!
//! Exit codes: `0` success, `1` error or violated invariant, `2` only
//! inconclusive verdicts.

pub mod commands;
pub mod report;
pub mod spec;
pub mod suite;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};

pub use commands::Options;
pub use report::{Report, Status};
pub use spec::{build_ring, parse_ring_spec, BuiltRing, FamilyName, ModuleSpec, RingSpec};
pub use suite::{run_suite, CheckOutcome, Fault, SuiteOptions, SuiteResult};

#[derive(Debug, Parser)]
#[command(
    name = "fpdim",
    version,
    about = "Koszul homology, Ext and small finitistic dimension over F_p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Highest Ext index or resolution stage computed.
    #[arg(long, global = true, default_value_t = crate::homology::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Largest ring size `p^dim` whose ideal lattice may be enumerated.
    #[arg(long, global = true, default_value_t = 4096)]
    pub budget: u128,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest free rank allowed in polynomial resolutions.
    #[arg(long, global = true, default_value_t = crate::homology::DEFAULT_RANK_BOUND)]
    pub rank_bound: usize,
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Print `key: value` lines instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    /// Include wall-clock timings, which make output run-dependent.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ring inspection.
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
    /// Koszul homology and cohomology of a sequence.
    Koszul {
        /// Ring spec: a file path, `-` for stdin, or inline JSON.
        spec: String,
        /// Comma-separated sequence.
        #[arg(long)]
        elements: String,
        /// Use the module `R/(these)` instead of `R`.
        #[arg(long)]
        quotient: Option<String>,
    },
    /// Koszul grade of an ideal on the ring.
    Grade {
        spec: String,
        /// Comma-separated generators.
        #[arg(long)]
        ideal: String,
    },
    /// `Ext^i(R/I, R)` up to the cutoff.
    Ext {
        spec: String,
        #[arg(long)]
        ideal: String,
    },
    /// Small finitistic dimension, or a lower bound over polynomial rings.
    Fpd {
        spec: String,
        /// Maximal ideals as generator lists, repeatable or `;`-separated.
        #[arg(long)]
        maximal: Vec<String>,
    },
    /// Full classifier report.
    Classify {
        spec: String,
        /// Candidate ideals for polynomial rings, repeatable or `;`-separated.
        #[arg(long)]
        ideal: Vec<String>,
        /// `d` for the weak (1,d) check; defaults to the computed fPD.
        #[arg(long)]
        weak_d: Option<usize>,
    },
    /// Check the structural identities over a seeded corpus.
    VerifyTheorems {
        /// Number of random algebras.
        #[arg(long, default_value_t = 100)]
        random: usize,
        /// Largest random algebra dimension.
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Extra finite rings to include.
        #[arg(long)]
        spec: Vec<String>,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<Fault>,
    },
    /// The table of worked example rings.
    #[command(alias = "paper-examples")]
    ExamplesTable,
}

#[derive(Debug, Subcommand)]
pub enum RingAction {
    /// Structure, local factors and ideal count.
    Show { spec: String },
}

/// Read a spec argument: inline JSON, `-` for stdin, or a file path.
pub fn read_spec_arg(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))
}

fn load(arg: &str) -> Result<(RingSpec, BuiltRing)> {
    let spec = parse_ring_spec(&read_spec_arg(arg)?)?;
    let built = build_ring(&spec)?;
    Ok((spec, built))
}

/// Run one parsed command, producing its report.
pub fn execute(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    let opts = Options {
        cutoff: g.cutoff,
        budget: g.budget,
        seed: g.seed,
        rank_bound: g.rank_bound,
    };
    let start = Instant::now();
    let mut extra_timings = std::collections::BTreeMap::new();
    let (name, spec, outcome) = match &cli.command {
        Command::Ring {
            action: RingAction::Show { spec },
        } => {
            let (s, b) = load(spec)?;
            ("ring show", Some(s), commands::ring_show(&b, &opts))
        }
        Command::Koszul {
            spec,
            elements,
            quotient,
        } => {
            let (s, b) = load(spec)?;
            (
                "koszul",
                Some(s),
                commands::koszul(&b, elements, quotient.as_deref()),
            )
        }
        Command::Grade { spec, ideal } => {
            let (s, b) = load(spec)?;
            ("grade", Some(s), commands::grade(&b, ideal))
        }
        Command::Ext { spec, ideal } => {
            let (s, b) = load(spec)?;
            ("ext", Some(s), commands::ext(&b, ideal, &opts))
        }
        Command::Fpd { spec, maximal } => {
            let (s, b) = load(spec)?;
            ("fpd", Some(s), commands::fpd(&b, maximal, &opts))
        }
        Command::Classify {
            spec,
            ideal,
            weak_d,
        } => {
            let (s, b) = load(spec)?;
            (
                "classify",
                Some(s),
                commands::classify(&b, ideal, *weak_d, &opts),
            )
        }
        Command::VerifyTheorems {
            random,
            max_dim,
            spec,
            inject_fault,
        } => {
            let mut extra = Vec::new();
            for arg in spec {
                let (_, b) = load(arg)?;
                let (a, _) = b.finite()?;
                extra.push(suite::extra_ring(b.description(), a.clone()));
            }
            let sopts = SuiteOptions {
                seed: g.seed,
                random_count: *random,
                max_dim: *max_dim,
                cutoff: g.cutoff,
                budget: g.budget,
                rank_bound: g.rank_bound,
                extra,
                fault: *inject_fault,
            };
            let outcome = run_suite(&sopts).map(|(res, times)| {
                extra_timings = times;
                let status = if res.all_passed {
                    Status::Ok
                } else {
                    Status::Violation
                };
                (serde_json::to_value(res).expect("plain data"), status)
            });
            ("verify-theorems", None, outcome)
        }
        Command::ExamplesTable => ("examples-table", None, commands::examples_table(&opts)),
    };
    let (results, status) = match outcome {
        Ok(x) => x,
        Err(Error::CutoffInconclusive(c)) => (
            json!({ "inconclusive": format!("not decided within cutoff {c}") }),
            Status::Inconclusive,
        ),
        Err(e) => return Err(e),
    };
    let mut report = Report::new(name, spec, results, status, g.seed);
    if g.timings {
        extra_timings.insert("total".into(), start.elapsed().as_secs_f64());
        report.timings = Some(extra_timings);
    }
    Ok(report)
}

/// Parse arguments, run, print, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let text = if cli.global.table {
        report.to_table()
    } else {
        report.to_json()
    };
    let written = match &cli.global.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    report.status.exit_code()
}
