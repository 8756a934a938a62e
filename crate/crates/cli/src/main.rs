//! `forge`: quandles, cohomology, cocycle invariants and the enveloping-group
//! criterion from the command line.
//!
//! Every subcommand writes JSON records, one per line, to stdout and a short
//! human summary to stderr. Element indices in records are 1-based, like the
//! file formats.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use forge_core::groups::DEFAULT_MAX_COSETS;

/// Exit status for a detected theorem violation.
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "forge", version, about = "Finite quandle computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle axioms on a Cayley table.
    Validate(QuandleArg),
    /// Order, connectivity, faithfulness, orbits and Inn(Q).
    Props(QuandleArg),
    /// Iterate Q -> inn(Q) until the quandle is faithful.
    InnSeq(QuandleArg),
    /// Second cohomology with Z_m coefficients.
    H2 {
        #[command(flatten)]
        quandle: QuandleArg,
        #[arg(long = "mod", value_name = "M")]
        modulus: u64,
        /// Write one cocycle file per generator into this directory.
        #[arg(long, value_name = "DIR")]
        emit_reps: Option<PathBuf>,
    },
    /// Build a quandle or group table.
    Make {
        #[command(subcommand)]
        what: MakeCommand,
        /// Write the table here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Build the abelian extension E(X, Z_m, phi).
    Extend {
        #[command(flatten)]
        input: CocycleArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cocycle state sums of knots given as braid closures.
    Invariant {
        #[command(flatten)]
        input: CocycleArgs,
        #[command(flatten)]
        knots: KnotArg,
        /// Also report the cut-open tangle checks for the extension.
        #[arg(long)]
        tangle: bool,
    },
    /// Decide whether a connected quandle is a conjugation quandle.
    Conjugation {
        #[command(flatten)]
        quandle: QuandleArg,
        #[command(flatten)]
        cosets: CosetArg,
    },
    /// Recover a Z_2 cocycle from an index-2 covering.
    RecoverExt {
        /// Source quandle Y.
        #[arg(long)]
        quandle: PathBuf,
        /// Target quandle X; defaults to inn(Y).
        #[arg(long, requires = "map")]
        target: Option<PathBuf>,
        /// One line of 1-based images of the elements of Y.
        #[arg(long, requires = "target")]
        map: Option<PathBuf>,
        /// Write the recovered cocycle here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extension verdict: conjugation criterion against invariant constancy.
    Verdict {
        #[command(flatten)]
        input: CocycleArgs,
        #[command(flatten)]
        knots: KnotArg,
        #[command(flatten)]
        cosets: CosetArg,
    },
    /// Coefficient vanishing for the extension by the d-th power of psi.
    PowerCheck {
        #[command(flatten)]
        input: CocycleArgs,
        #[arg(long)]
        d: u64,
        #[command(flatten)]
        knots: KnotArg,
        #[command(flatten)]
        cosets: CosetArg,
    },
    /// Certificates that an extension is not an inner image.
    Certify {
        #[command(flatten)]
        input: CocycleArgs,
        #[command(flatten)]
        knots: KnotArg,
        #[command(flatten)]
        cosets: CosetArg,
    },
}

#[derive(Subcommand)]
enum MakeCommand {
    /// Dihedral quandle on Z_n.
    Dihedral { n: usize },
    /// Alexander quandle on Z_n with unit t.
    Alexander { n: usize, t: u64 },
    /// Conjugacy class of an element of a group.
    Conj {
        #[arg(long)]
        group: PathBuf,
        /// 1-based element index in the group file.
        #[arg(long)]
        elem: usize,
    },
    /// GAlex(G, f) with f conjugation by an element.
    Galex {
        #[arg(long)]
        group: PathBuf,
        /// 1-based index of the conjugating element.
        #[arg(long)]
        conj: usize,
    },
    /// Trivial quandle of order n.
    Trivial { n: usize },
    /// A group table.
    Group {
        #[arg(value_enum)]
        family: GroupFamily,
        n: usize,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum GroupFamily {
    Cyclic,
    Symmetric,
}

#[derive(Args)]
struct QuandleArg {
    /// Cayley table file.
    #[arg(long)]
    quandle: PathBuf,
}

#[derive(Args)]
struct CocycleArgs {
    /// Cayley table of the base quandle.
    #[arg(long)]
    quandle: PathBuf,
    /// Cocycle file.
    #[arg(long)]
    cocycle: PathBuf,
}

#[derive(Args)]
struct KnotArg {
    /// Knot table file; defaults to the bundled table.
    #[arg(long)]
    knots: Option<PathBuf>,
}

#[derive(Args)]
struct CosetArg {
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(status) => status,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<forge_core::Error>() {
                Some(forge_core::Error::TheoremViolation(_)) => ExitCode::from(EXIT_VIOLATION),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
