//! Command-line front end for `specht-core`.

pub mod commands;
pub mod config;
pub mod literal;
pub mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use specht_core::modrep::Budgets;
use specht_core::{Partition, Prime};
use thiserror::Error;

pub use config::{Filters, RunConfig, Suite};
pub use literal::{parse_partition_literal, render, LiteralError, PartitionLiteral};
pub use report::{Format, Output};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] specht_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "specht", version, about = "Specht module combinatorics, vertices and rank varieties")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format [default: json, or csv for sweep]
    #[arg(long, short = 'f', value_enum, global = true)]
    pub format: Option<Format>,
    /// Write to a file instead of stdout
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for parallel suites and sweeps
    #[arg(long, env = "SPECHT_WORKERS", global = true)]
    pub workers: Option<usize>,
    /// Largest tabloid module to build
    #[arg(long, global = true, default_value_t = Budgets::default().tabloids)]
    pub max_tabloids: usize,
    /// Largest dense Specht basis, in entries
    #[arg(long, global = true, default_value_t = Budgets::default().basis_entries)]
    pub max_basis_entries: usize,
    /// Most points a single sweep may visit
    #[arg(long, global = true, default_value_t = Budgets::default().sweep_points)]
    pub max_sweep_points: usize,
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
    pub p: Prime,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hook lengths, dimension and regularity
    Info {
        #[arg(value_parser = parse_mu)]
        mu: Partition,
        #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
        p: Option<Prime>,
    },
    /// m-core and m-weight
    Core {
        #[arg(value_parser = parse_mu)]
        mu: Partition,
        #[arg(short = 'm', long = "modulus", value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
    },
    /// p-adic expansion and the composition rho
    Expand {
        #[arg(value_parser = parse_mu)]
        mu: Partition,
        #[command(flatten)]
        prime: PrimeArg,
    },
    /// Vertex and complexity report
    Classify {
        #[arg(value_parser = parse_mu)]
        mu: Partition,
        #[command(flatten)]
        prime: PrimeArg,
        /// Assert that the Specht module is simple
        #[arg(long)]
        simple: bool,
        /// Assert that the Specht module is indecomposable
        #[arg(long)]
        indecomposable: bool,
        /// Assert that the vertex is abelian
        #[arg(long)]
        assume_abelian: bool,
    },
    /// Partitions of n with their p-core and p-weight
    Enumerate {
        n: usize,
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        two_regular: bool,
        #[arg(long)]
        four_core: bool,
        #[arg(long)]
        p2_core: bool,
        #[arg(long)]
        pxp: bool,
    },
    /// Exhaustive property suite; exits 1 on any counterexample
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict to one prime (expansion, gate)
        #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
        p: Option<Prime>,
        /// Restrict to one modulus (hook-weight)
        #[arg(short = 'm', long = "modulus", value_parser = clap::value_parser!(u64).range(2..))]
        m: Option<u64>,
    },
    /// Jordan profile of u_alpha at every nonzero point
    Sweep {
        #[arg(value_parser = parse_mu)]
        mu: Partition,
        #[command(flatten)]
        prime: PrimeArg,
        /// `V1^3xV2` style factors or `;`-separated generators such as `(1,2,3);(4,5,6)`
        #[arg(long)]
        subgroup: String,
        /// Field extension degree
        #[arg(short = 'e', long = "extension", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=3))]
        e: u32,
    },
    /// Complexity interval from the classifier and swept rank varieties
    Bound {
        #[arg(value_parser = parse_mu)]
        mu: Partition,
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(short = 'e', long = "extension", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=3))]
        e: u32,
        #[arg(long)]
        simple: bool,
    },
}

fn parse_mu(s: &str) -> Result<Partition, String> {
    parse_partition_literal(s).map_err(|e| e.to_string())
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let v: u64 = s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))?;
    Prime::new(v).map_err(|e| e.to_string())
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Core { .. } => "core",
            Command::Expand { .. } => "expand",
            Command::Classify { .. } => "classify",
            Command::Enumerate { .. } => "enumerate",
            Command::Verify { .. } => "verify",
            Command::Sweep { .. } => "sweep",
            Command::Bound { .. } => "bound",
        }
    }
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        let g = &self.global;
        let mut cfg = RunConfig {
            command: self.command.name(),
            p: None,
            modulus: None,
            max_n: None,
            extension: 1,
            format: g.format.unwrap_or(match self.command {
                Command::Sweep { .. } => Format::Csv,
                _ => Format::Json,
            }),
            output: g.output.clone(),
            workers: g.workers,
            budgets: Budgets {
                tabloids: g.max_tabloids,
                basis_entries: g.max_basis_entries,
                sweep_points: g.max_sweep_points,
            },
            simple: false,
            indecomposable: false,
            assume_abelian: false,
        };
        match &self.command {
            Command::Info { p, .. } => cfg.p = *p,
            Command::Core { m, .. } => cfg.modulus = Some(*m as usize),
            Command::Expand { prime, .. } | Command::Enumerate { prime, .. } => cfg.p = Some(prime.p),
            Command::Classify {
                prime,
                simple,
                indecomposable,
                assume_abelian,
                ..
            } => {
                cfg.p = Some(prime.p);
                cfg.simple = *simple;
                cfg.indecomposable = *indecomposable;
                cfg.assume_abelian = *assume_abelian;
            }
            Command::Verify { max_n, p, m, .. } => {
                cfg.max_n = *max_n;
                cfg.p = *p;
                cfg.modulus = m.map(|m| m as usize);
            }
            Command::Sweep { prime, e, .. } => {
                cfg.p = Some(prime.p);
                cfg.extension = *e;
            }
            Command::Bound { prime, e, simple, .. } => {
                cfg.p = Some(prime.p);
                cfg.extension = *e;
                cfg.simple = *simple;
            }
        }
        cfg
    }
}

/// Runs a parsed command, writing the report to `out` (or the configured file).
/// Returns the exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = cli.config();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start workers: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| dispatch(&cli.command, &cfg));
    let (output, failed) = match result {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = emit(&output, &cfg, out) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

enum Emitted {
    Generic(Output),
    Sweep(commands::SweepResult),
}

fn dispatch(command: &Command, cfg: &RunConfig) -> Result<(Emitted, bool), CliError> {
    let generic = |o: Output| Ok((Emitted::Generic(o), false));
    match command {
        Command::Info { mu, .. } => generic(commands::info(mu, cfg)),
        Command::Core { mu, .. } => generic(commands::core(mu, cfg)?),
        Command::Expand { mu, .. } => generic(commands::expand(mu, cfg)?),
        Command::Classify { mu, .. } => generic(commands::classify_cmd(mu, cfg)?),
        Command::Enumerate {
            n,
            two_regular,
            four_core,
            p2_core,
            pxp,
            ..
        } => {
            let filters = Filters {
                two_regular: *two_regular,
                four_core: *four_core,
                p2_core: *p2_core,
                pxp: *pxp,
            };
            generic(commands::enumerate(*n, &filters, cfg)?)
        }
        Command::Verify { suite, .. } => {
            let out = commands::verify(*suite, cfg);
            let failed = matches!(&out, Output::Record(v) if v["passed"] == false);
            Ok((Emitted::Generic(out), failed))
        }
        Command::Sweep { mu, subgroup, .. } => {
            Ok((Emitted::Sweep(commands::sweep_cmd(mu, subgroup, cfg)?), false))
        }
        Command::Bound { mu, .. } => {
            let (out, consistent) = commands::bound(mu, cfg)?;
            Ok((Emitted::Generic(out), !consistent))
        }
    }
}

fn emit(output: &Emitted, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let mut file;
    let target: &mut dyn Write = match &cfg.output {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    match output {
        Emitted::Generic(o) => o.write(cfg.format, &mut *target)?,
        Emitted::Sweep(s) if cfg.format == Format::Csv => {
            specht_core::modrep::write_sweep_csv(&s.records, s.p, &mut *target)?
        }
        Emitted::Sweep(s) => s.output().write(cfg.format, &mut *target)?,
    }
    target.flush()?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            code
        }
    }
}
