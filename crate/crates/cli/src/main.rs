mod commands;
mod context;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcc_core::hall::Mode;
use qcc_core::quiver::DimVector;
use qcc_core::repalg::{StabilityFunction, DEFAULT_SEED};

use crate::context::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "qcc",
    version,
    about = "CSM and motivic Chern classes of Dynkin quiver orbits"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Quiver file: `{"vertices": [...], "arrows": [[tail, head], ...]}`.
    #[arg(long, global = true)]
    pub quiver: Option<PathBuf>,
    /// `cohomology` (csm) or `ktheory` (mc).
    #[arg(long, global = true, default_value = "cohomology", value_parser = parse_mode)]
    pub mode: Mode,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Basic class cache, read before and written after a computation.
    #[arg(long, global = true, env = "QCC_TABLE_CACHE")]
    pub table: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for the parallel evaluator.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Evaluate everything on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    /// Largest coordinate accepted in a dimension vector or cutoff.
    #[arg(long, global = true, default_value_t = 6)]
    pub cutoff_limit: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    V1,
    V2,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyArg {
    Sieve,
    Commutator,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots.
    Roots,
    /// The canonical Reineke order, or every admissible one.
    Reineke {
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Kostant partitions of a dimension vector with their codimensions.
    Kostant {
        #[arg(long, value_parser = parse_dim)]
        gamma: DimVector,
    },
    /// Class of one orbit; the open orbit unless `--part` is given.
    Class {
        #[arg(long, value_parser = parse_dim)]
        gamma: DimVector,
        /// Summands as `root[*mult]` separated by `;`, e.g. `1,1,0;0,1,0*2`.
        #[arg(long)]
        part: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::V2)]
        method: Method,
    },
    /// Identity checks.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Build or extend the basic class table.
    Table {
        /// Only roots below these dimension vectors.
        #[arg(long, value_parser = parse_dim)]
        whitelist: Vec<DimVector>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Sieve)]
        strategy: StrategyArg,
        /// Sieve over every non-open orbit instead of the maximal-rank ones.
        #[arg(long)]
        full_sieve: bool,
    },
    /// Dot diagram of the open orbit (type A only).
    Diagram {
        #[arg(long, value_parser = parse_dim)]
        gamma: DimVector,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Orbit classes of `gamma` sum to the class of the whole space.
    Sum {
        #[arg(long, value_parser = parse_dim)]
        gamma: DimVector,
    },
    /// Ordered exponential products agree for several stability functions.
    Dt {
        #[arg(long, value_parser = parse_z)]
        z1: Option<StabilityFunction>,
        #[arg(long, value_parser = parse_z)]
        z2: Option<StabilityFunction>,
        /// Further stability functions.
        #[arg(long, value_parser = parse_z)]
        z: Vec<StabilityFunction>,
        /// Add this many random generic stability functions.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, value_parser = parse_dim)]
        cutoff: DimVector,
    },
    /// Basic classes equal the product over arrows and vertices (cohomology).
    Conjecture {
        /// Only this root; every root by default.
        #[arg(long, value_parser = parse_dim)]
        beta: Option<DimVector>,
    },
    /// Associativity of the shuffle product on random symmetric inputs.
    Associativity {
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Largest coordinate sum of the three random dimension vectors together.
        #[arg(long, default_value_t = 3)]
        max_total: u32,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: qcc_core::hall::HallError| e.to_string())
}

fn parse_dim(s: &str) -> Result<DimVector, String> {
    s.parse().map_err(|e: qcc_core::quiver::QuiverError| e.to_string())
}

fn parse_z(s: &str) -> Result<StabilityFunction, String> {
    s.parse().map_err(|e: qcc_core::repalg::RepError| e.to_string())
}

fn run(cli: Cli) -> Result<commands::Report, CliError> {
    let g = &cli.global;
    if let Some(n) = g.jobs {
        qcc_core::exec::set_threads(n.max(1));
    }
    if g.sequential {
        qcc_core::exec::set_parallel(false);
    }
    match cli.command {
        Command::Roots => commands::roots(g),
        Command::Reineke { all, limit } => commands::reineke(g, all, limit),
        Command::Kostant { gamma } => commands::kostant(g, &gamma),
        Command::Class { gamma, part, method } => commands::class(g, &gamma, part.as_deref(), method),
        Command::Verify { which } => commands::verify(g, which),
        Command::Table {
            whitelist,
            strategy,
            full_sieve,
        } => commands::table(g, whitelist, strategy, full_sieve),
        Command::Diagram { gamma } => commands::diagram(g, &gamma),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let format = cli.global.format;
    match run(cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("qcc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
