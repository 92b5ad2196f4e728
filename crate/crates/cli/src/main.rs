//! `modp-gl2`: command-line access to the weight, tuple, diagram, lattice and
//! characteristic-cycle engines, plus a `verify` sweep over a `(p, f)` grid.
//!
//! Exit codes: 0 when every check passes, 1 on invalid input, 2 when a
//! mathematical check fails.

mod commands;
mod parse;
mod report;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "modp-gl2", version, about = "Exact combinatorics for mod p GL2 weights and lattices")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Serre weights, torus characters and genericity
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// The tuple families D and P_ind
    #[command(subcommand)]
    Tuples(TuplesCmd),
    /// Weight sets, principal series constituents, hypothesis counts
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Subspace profiles over a small prime field
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Multiplicities and characteristic cycles over F[y_i, z_i]/(y_i z_i)
    #[command(subcommand)]
    Cycles(CyclesCmd),
    /// Run every invariant check over a grid of (p, f)
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ParamArgs {
    /// Odd prime p
    #[arg(long)]
    pub p: i64,
    /// Inertial degree f
    #[arg(long)]
    pub f: i64,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Comma-separated digits r_0,...,r_{f-1}
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub digits: Vec<i64>,
    /// Determinant twist m
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub twist: i64,
}

#[derive(Subcommand, Debug)]
pub enum WeightsCmd {
    /// Torus character of a weight
    Char(WeightArgs),
    /// The weight carrying the conjugate character
    S(WeightArgs),
    /// Genericity of a weight or of inertial data, and the count of generic weights
    Generic {
        #[command(flatten)]
        params: ParamArgs,
        /// Genericity level n
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        digits: Option<Vec<i64>>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        twist: i64,
        /// Read the digits as inertial data of this kind (reducible-split or irreducible)
        #[arg(long)]
        kind: Option<String>,
    },
    /// Genericity required by each tabulated result
    Thresholds {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        theorem: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum TuplesCmd {
    /// List the weight family D
    #[command(name = "list-D")]
    ListD(ParamArgs),
    /// List the principal-series family P_ind
    #[command(name = "list-P")]
    ListP(ParamArgs),
    /// Determinant twist e(λ) at the given digits
    E(TupleArgs),
    /// Weight attached to a tuple at the given digits
    Weight(TupleArgs),
    /// Check that D and P_ind meet only in the identity tuple
    Intersection(ParamArgs),
}

#[derive(Args, Debug, Clone)]
pub struct TupleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Comma-separated tokens such as x+0,P-3-x
    #[arg(long)]
    pub tuple: String,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub digits: Vec<i64>,
}

#[derive(Subcommand, Debug)]
pub enum DiagramCmd {
    /// Weights of a reducible split representation, graded by length
    Weights(WeightArgs),
    /// Constituents of the principal series of a weight
    Jh(WeightArgs),
    /// Ext dimensions and counts for multiplicity r
    Profile {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        r: i64,
        #[arg(long, default_value = "reducible-split")]
        kind: String,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FieldArgs {
    /// Multiplicity r, the ambient dimension
    #[arg(long)]
    pub r: usize,
    /// Prime coefficient field size
    #[arg(long, default_value_t = 3)]
    pub field: u32,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Socle length of a profile
    Soc {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        field: FieldArgs,
        /// Spaces separated by '/': a dimension, or vectors like [1 0 1;0 1 0]
        #[arg(long)]
        profile: String,
    },
    /// Length bound between nested profiles
    Bound(PairArgs),
    /// Profile of the quotient of nested profiles
    Quotient(PairArgs),
    /// Longest strict chains between nested profiles
    Chains {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        field: FieldArgs,
        /// Defaults to the zero profile
        #[arg(long)]
        lower: Option<String>,
        /// Defaults to the full profile
        #[arg(long)]
        upper: Option<String>,
        /// Kind used for the defaults
        #[arg(long, default_value = "reducible-split")]
        kind: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Split the principal series off the full reducible profile
    #[command(name = "ps-split")]
    PsSplit {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        field: FieldArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub outer: String,
    #[arg(long)]
    pub inner: String,
}

#[derive(Subcommand, Debug)]
pub enum CyclesCmd {
    /// The minimal primes, p0 last
    Primes(ParamArgs),
    /// Multiplicity of R/I at a minimal prime
    Mult {
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated generators such as y0*z1,y1^2; empty for the zero ideal
        #[arg(long)]
        ideal: String,
        /// One variable per index, such as z,y
        #[arg(long)]
        prime: String,
    },
    /// Characteristic cycle of a direct sum of cyclic modules
    Cycle {
        #[command(flatten)]
        params: ParamArgs,
        /// IDEAL[:MULTIPLICITY], repeatable
        #[arg(long = "summand", required = true)]
        summands: Vec<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long)]
    pub p_max: u64,
    #[arg(long)]
    pub f_max: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per check and grid point
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
}

fn run(group: Group) -> modp_gl2::Result<report::Report> {
    match group {
        Group::Weights(cmd) => commands::weights(cmd),
        Group::Tuples(cmd) => commands::tuples(cmd),
        Group::Diagram(cmd) => commands::diagram(cmd),
        Group::Lattice(cmd) => commands::lattice(cmd),
        Group::Cycles(cmd) => commands::cycles(cmd),
        Group::Verify(args) => verify::verify(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{}", err.render());
            return ExitCode::from(1);
        }
    };
    match run(cli.group) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = out.write_all(report.render().as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
