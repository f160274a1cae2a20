//! `fext`: check graphs for fractional k-extendability, sweep graph6 corpora
//! against the extremal bounds, and verify the comparison grids.

mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fext_core::harness::{GridLemma, TheoremId};
use fext_core::spectral::{Family, DEFAULT_TOL};
use serde::Serialize;

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "fext",
    version,
    about = "Fractional k-extendability: checks, corpus sweeps and comparison grids"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct Common {
    /// Eigensolver tolerance
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true, env = "FEXT_JOBS")]
    #[serde(skip)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Byte-identical output across runs and thread counts
    #[arg(long, global = true)]
    deterministic: bool,
    /// Write the report here instead of stdout
    #[arg(short, long, global = true)]
    #[serde(skip)]
    output: Option<PathBuf>,
}

/// `k` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct KRange {
    pub min: usize,
    pub max: usize,
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        let (min, max) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => (parse(s)?, parse(s)?),
        };
        if min == 0 || min > max {
            return Err(format!("bad k range {s:?}"));
        }
        Ok(KRange { min, max })
    }
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
enum Command {
    /// Spectral report and both oracle verdicts for one graph
    Check {
        /// graph6 record, or "-" for the first record on stdin
        graph6: String,
        #[arg(short)]
        k: usize,
    },
    /// Emit K_s ∨ (K_{n1} ∪ tK_1) with its radii and quotient polynomials
    Extremal {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Join clique size (default 2k)
        #[arg(short)]
        s: Option<usize>,
        /// Also certify sharpness against this theorem
        #[arg(long, value_parser = parse_theorem)]
        theorem: Option<TheoremId>,
    },
    /// Check every graph of a graph6 corpus against a theorem
    Sweep {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(short)]
        k: usize,
        /// Corpus path, "-" for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Verify a comparison lemma on its parameter grid
    Grid {
        #[arg(long, value_parser = parse_lemma)]
        lemma: GridLemma,
        /// k or a range like 1..3
        #[arg(short)]
        k: KRange,
        /// Largest order
        #[arg(short)]
        n: usize,
        /// Largest minimum degree for the G3 comparisons (default n/6)
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Closed-form characteristic polynomial of a quotient matrix
    Polys {
        #[arg(value_parser = parse_family)]
        family: Family,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        s: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Spectral report for every graph of a graph6 corpus
    Report {
        /// Also run the lemma oracle with this k
        #[arg(short)]
        k: Option<usize>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Write a graph6 corpus of connected graphs, one per isomorphism class
    Generate {
        #[arg(short)]
        n: usize,
        /// Only graphs missing at most this many edges of K_n
        #[arg(long)]
        max_missing: Option<usize>,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
        .map_err(|e: fext_core::HarnessError| e.to_string())
}

fn parse_lemma(s: &str) -> Result<GridLemma, String> {
    s.parse()
        .map_err(|e: fext_core::HarnessError| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Extremal { .. } => "extremal",
            Command::Sweep { .. } => "sweep",
            Command::Grid { .. } => "grid",
            Command::Polys { .. } => "polys",
            Command::Report { .. } => "report",
            Command::Generate { .. } => "generate",
        }
    }
}

#[derive(Serialize)]
struct RunConfig<'a> {
    #[serde(flatten)]
    command: &'a Command,
    #[serde(flatten)]
    common: &'a Common,
    #[serde(skip_serializing_if = "Option::is_none")]
    jobs: Option<usize>,
}

fn run(cli: &Cli) -> Result<u8> {
    let c = &cli.common;
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        bail!("--tol must be a positive number");
    }
    let jobs = c.jobs;
    if let Some(j) = jobs {
        if j == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()?;
    }

    let outcome = match &cli.command {
        Command::Check { graph6, k } => commands::check(graph6, *k, c.tol)?,
        Command::Extremal { n, k, s, theorem } => {
            commands::extremal(*n, *k, s.unwrap_or(2 * k), *theorem, c.tol)?
        }
        Command::Sweep { theorem, k, input } => commands::sweep(input, *theorem, *k, c.tol)?,
        Command::Grid { lemma, k, n, delta } => commands::grid(*lemma, *k, *n, *delta, c.tol)?,
        Command::Polys {
            family,
            n,
            k,
            s,
            delta,
        } => commands::polys(*family, *n, *k, *s, *delta, c.tol)?,
        Command::Report { k, input } => commands::report(input, *k, c.tol)?,
        Command::Generate { n, max_missing } => commands::generate(*n, *max_missing)?,
    };

    let config = RunConfig {
        command: &cli.command,
        common: c,
        jobs: if c.deterministic { None } else { jobs },
    };
    let mut sink: Box<dyn Write> = match &c.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    output::render(cli.command.name(), &config, &outcome, c.format, &mut *sink)?;
    sink.flush()?;
    Ok(outcome.exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
