//! `gns`: corners, enumeration and counting bounds for generalized numerical
//! semigroups from the command line.
//!
//! Every multi-valued output is line-delimited JSON; the `table1` report is
//! CSV. Exit codes: 0 success, 2 invalid input, 3 unrealizable corner,
//! 4 verification mismatch, 5 oracle budget exceeded.

mod commands;
mod error;
mod input;
mod table1;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gns_core::{MonomialOrder, Point};

use error::{exit, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "gns",
    version,
    about = "Generalized numerical semigroups by corner"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Corner, genus, Frobenius type, pseudo-Frobenius elements and special
    /// gaps of a semigroup given as a gap-set JSON document.
    Corner {
        /// Gap-set JSON file, or `-` for stdin.
        #[arg(long)]
        gaps: PathBuf,
    },
    /// Every semigroup with a given corner, one JSON document per line.
    Enumerate(EnumerateArgs),
    /// Lower and upper bounds on the number of semigroups with a corner.
    Bounds {
        #[arg(long)]
        corner: Point,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also count the semigroups (fills the `N` column).
        #[arg(long)]
        count: bool,
    },
    /// Reproduce the table of exact counts and bounds as CSV.
    Table1(table1::Table1Args),
    /// Explicit constructions with a prescribed corner.
    #[command(subcommand)]
    Construct(Construct),
    /// Push every gap onto the coordinate axes, keeping the corner.
    ReduceAxes {
        #[arg(long)]
        gaps: PathBuf,
    },
    /// Compare the tree enumeration against the brute-force oracle.
    Verify {
        #[arg(long)]
        corner: Point,
        #[arg(long, default_value_t = MonomialOrder::Lex)]
        order: MonomialOrder,
        /// Largest box size the oracle may exhaust; defaults to
        /// `GNS_ORACLE_BUDGET` or 20.
        #[arg(long)]
        oracle_budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    corner: Point,
    #[arg(long, default_value_t = MonomialOrder::Lex)]
    order: MonomialOrder,
    /// A single genus `g` or an inclusive range `gmin:gmax`.
    #[arg(long, value_parser = input::parse_genus)]
    genus: Option<(usize, usize)>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Print an aggregate report instead of the semigroups.
    #[arg(long)]
    count_only: bool,
    /// Do not descend below this depth (the root has depth 0).
    #[arg(long)]
    depth: Option<usize>,
    /// Visit the tree level by level instead of depth first.
    #[arg(long)]
    bfs: bool,
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// The ordinary semigroup: every point of the box below the corner is a gap.
    Ordinary {
        #[arg(long)]
        corner: Point,
    },
    /// A least-genus semigroup with all gaps on the axes.
    MinGenus {
        #[arg(long)]
        corner: Point,
    },
    /// The ordinary semigroup with the points of a subset of `Ω_J` adjoined.
    OmegaUnion {
        #[arg(long)]
        corner: Point,
        /// Axis set `J`, 1-based, e.g. `1,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        axes: Vec<usize>,
        /// JSON array of points, e.g. `[[0,1],[1,1]]`.
        #[arg(long, default_value = "[]")]
        subset: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn run(cli: Cli) -> error::CliResult {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Corner { gaps } => commands::corner(&gaps, &mut out)?,
        Command::Enumerate(a) => commands::enumerate(&a, &mut out)?,
        Command::Bounds {
            corner,
            format,
            count,
        } => commands::bounds(&corner, format == Format::Csv, count, &mut out)?,
        Command::Table1(a) => table1::run(&a, &mut out)?,
        Command::Construct(c) => commands::construct(&c, &mut out)?,
        Command::ReduceAxes { gaps } => commands::reduce_axes(&gaps, &mut out)?,
        Command::Verify {
            corner,
            order,
            oracle_budget,
            jobs,
        } => commands::verify(
            &corner,
            order,
            input::oracle_budget(oracle_budget)?,
            jobs,
            &mut out,
        )?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(exit::OK as u8),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
