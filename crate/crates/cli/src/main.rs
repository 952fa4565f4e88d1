//! `complexcode`: parameters of codes built from simplicial complexes.
//!
//! Every global flag can also be set through an environment variable
//! (`COMPLEXCODE_FIELD`, `COMPLEXCODE_BUDGET_MESSAGES`, `COMPLEXCODE_BUDGET_COLUMNS`,
//! `COMPLEXCODE_FORMAT`, `COMPLEXCODE_THREADS`); a flag on the command line wins.
//!
//! Exit status: 0 on success, 1 on input errors, 2 when `reproduce-paper` finds a
//! mismatch that is not a flagged discrepancy.

mod commands;
mod render;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use complexcode_core::{Budgets, Family, PrimeModulus};

#[derive(Parser, Debug)]
#[command(name = "complexcode", version, about = "Linear codes from simplicial complexes")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Prime field size.
    #[arg(long, global = true, env = "COMPLEXCODE_FIELD", default_value = "2")]
    pub field: u64,
    /// Largest number of messages an exhaustive sweep may visit (integer or `2^b`).
    #[arg(long, global = true, env = "COMPLEXCODE_BUDGET_MESSAGES", default_value = "2^24", value_parser = parse_budget)]
    pub budget_messages: u64,
    /// Largest number of generator columns that may be materialized (integer or `2^b`).
    #[arg(long, global = true, env = "COMPLEXCODE_BUDGET_COLUMNS", default_value = "2^24", value_parser = parse_budget)]
    pub budget_columns: u64,
    #[arg(long, global = true, env = "COMPLEXCODE_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for sweeps: `auto` or a positive count.
    #[arg(long, global = true, env = "COMPLEXCODE_THREADS", default_value = "auto")]
    pub threads: Threads,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug)]
pub enum Threads {
    Auto,
    Count(usize),
}

impl FromStr for Threads {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Threads::Auto),
            _ => match s.parse::<usize>() {
                Ok(n) if n > 0 => Ok(Threads::Count(n)),
                _ => Err(format!("expected `auto` or a positive integer, got {s:?}")),
            },
        }
    }
}

fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Some(exp) = s.strip_prefix("2^") {
        return match exp.parse::<u32>() {
            Ok(b) if b < 64 => Ok(1u64 << b),
            _ => Err(format!("bad exponent in {s:?}")),
        };
    }
    s.parse::<u64>().map_err(|_| format!("expected an integer or 2^b, got {s:?}"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameters of the face code of a complex.
    Params(ParamsArgs),
    /// Parameters of the anticode (every vector of F_p^k that is not a face).
    Anticode(AnticodeArgs),
    /// Apply a topological operation and compare parameters before and after.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Parameters of the closed-form families against their Griesmer bound.
    Family(FamilyArgs),
    /// Relative distance of anticodes as the vertex count grows.
    Sweep(SweepArgs),
    /// Recompute every published instance and compare with the printed values.
    ReproducePaper {
        /// Instance file to use instead of the embedded one.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct ParamsArgs {
    /// Facet list (JSON or plain text).
    pub input: PathBuf,
    /// Enumerate every message instead of using the geometric minimum.
    #[arg(long)]
    pub exhaustive: bool,
    /// With `--format csv`, emit the weight distribution (implies `--exhaustive`).
    #[arg(long)]
    pub distribution: bool,
}

#[derive(Args, Debug)]
pub struct AnticodeArgs {
    pub input: PathBuf,
    /// Materialize the anticode columns and sweep them instead of using the face-code identity.
    #[arg(long)]
    pub exhaustive: bool,
    /// With `--format csv`, emit the weight distribution.
    #[arg(long)]
    pub distribution: bool,
}

#[derive(Args, Debug)]
pub struct OpInput {
    pub input: PathBuf,
    /// Compute distances by enumerating messages.
    #[arg(long)]
    pub exhaustive: bool,
}

#[derive(Subcommand, Debug)]
pub enum OpCommand {
    /// Cone over a fresh apex.
    Cone {
        #[command(flatten)]
        input: OpInput,
        /// Label of the apex (default: one past the largest label).
        #[arg(long)]
        apex: Option<u64>,
    },
    /// Remove every facet.
    Boundary {
        #[command(flatten)]
        input: OpInput,
    },
    /// Faces of dimension at most `r`.
    Skeleton {
        #[command(flatten)]
        input: OpInput,
        #[arg(long)]
        r: usize,
    },
    /// Link of a vertex.
    Link {
        #[command(flatten)]
        input: OpInput,
        #[arg(long)]
        vertex: u64,
    },
    /// Identify vertices according to a map file of `src dst` lines.
    Glue {
        #[command(flatten)]
        input: OpInput,
        #[arg(long)]
        map: PathBuf,
    },
    /// Stellar subdivision of a facet.
    Subdivide {
        #[command(flatten)]
        input: OpInput,
        /// Facet labels, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        facet: Vec<u64>,
        /// Label of the new vertex (default: one past the largest label).
        #[arg(long)]
        apex: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(value_parser = parse_family)]
    pub family: Family,
    /// First index.
    #[arg(long, default_value_t = 2)]
    pub from: u32,
    /// Last index.
    #[arg(long, default_value_t = 6)]
    pub to: u32,
    #[arg(long)]
    pub exhaustive: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: complexcode_core::Error| e.to_string())
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Rule {
    /// A single triangle plus isolated vertices.
    Triangle,
    /// As many disjoint triangles as fit, remaining vertices isolated.
    DisjointTriangles,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = Rule::Triangle, conflicts_with = "base")]
    pub rule: Rule,
    /// Base complex padded with isolated vertices, instead of a built-in rule.
    #[arg(long)]
    pub base: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    pub k_min: usize,
    #[arg(long, default_value_t = 14)]
    pub k_max: usize,
}

pub struct Context {
    pub p: PrimeModulus,
    pub budgets: Budgets,
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let g = cli.global;
    if let Threads::Count(n) = g.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    let ctx = Context {
        p: PrimeModulus::new(g.field).map_err(|e| e.to_string())?,
        budgets: Budgets {
            columns: g.budget_columns,
            messages: g.budget_messages,
            ..Budgets::default()
        },
        format: g.format,
    };
    let out = match cli.command {
        Command::Params(a) => commands::params(&ctx, &a)?,
        Command::Anticode(a) => commands::anticode(&ctx, &a)?,
        Command::Op { op } => commands::op(&ctx, &op)?,
        Command::Family(a) => commands::family(&ctx, &a)?,
        Command::Sweep(a) => commands::sweep(&ctx, &a)?,
        Command::ReproducePaper { fixture } => {
            let (text, failed) = reproduce::run(&ctx, fixture.as_deref())?;
            print!("{text}");
            return Ok(if failed { 2 } else { 0 });
        }
    };
    print!("{out}");
    Ok(0)
}
