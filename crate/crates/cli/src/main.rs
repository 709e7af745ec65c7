//! `efd`: command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 outside the supported fragment,
//! 4 property failure.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use efd::models::{DEFAULT_BUDGET, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SigArg {
    Group,
    Hoop,
    Mv,
}

impl From<SigArg> for efd::term::Signature {
    fn from(s: SigArg) -> Self {
        match s {
            SigArg::Group => efd::term::Signature::Group,
            SigArg::Hoop => efd::term::Signature::Hoop,
            SigArg::Mv => efd::term::Signature::Mv,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "efd", version, about = "Equationally defined functions over l-groups, hoops and perfect MV-algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "EFD_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Sample size for randomized steps (default depends on the command).
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct StatementInput {
    /// Statements: `forall x1 exists! z1 : ...`, `forall x1 : s = t`,
    /// `delta K`, `epsilon K`, `boolean` or `absurd`.
    #[arg(long = "sentence", short = 's')]
    pub sentences: Vec<String>,
    /// File with one statement per line; blank lines and `#` comments are
    /// skipped.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeOp {
    Includes,
    Meet,
    Join,
    Order,
    Structure,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a term or statement and print its syntax tree.
    Parse {
        #[arg(long, value_enum)]
        sig: SigArg,
        text: String,
        /// Also expand derived operations into primitives.
        #[arg(long)]
        expand: bool,
    },
    /// Piecewise-linear canonical form of a group term.
    Canon {
        #[arg(long, value_enum, default_value_t = SigArg::Group)]
        sig: SigArg,
        term: String,
        /// Number of variables (defaults to the largest index used).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = efd::canon::DEFAULT_CAP)]
        cap: usize,
    },
    /// Reduce `forall x exists! z : k z = t(x)` to plain divisibility by k'.
    Reduce {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        term: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = efd::canon::DEFAULT_CAP)]
        cap: usize,
    },
    /// Classify a set of statements into its class of algebras.
    Classify {
        #[arg(long, value_enum)]
        sig: SigArg,
        #[command(flatten)]
        input: StatementInput,
        #[arg(long, default_value_t = efd::canon::DEFAULT_CAP)]
        cap: usize,
    },
    /// Translate a hoop sentence to groups (star map) or an MV sentence to
    /// hoops (through its radical decomposition).
    Translate {
        #[arg(long, value_enum)]
        sig: SigArg,
        sentence: String,
    },
    /// Decompose an MV sentence into radical-respecting sentences.
    Decompose { sentence: String },
    /// Decide full-dimensionality of a homogeneous inequality system given as
    /// `{"n": 2, "rows": [[1, 0], [0, 1]]}`.
    Fulldim {
        system: String,
        /// Also report a sample of solutions.
        #[arg(long)]
        sample: bool,
    },
    /// Evaluate a term in a witness algebra.
    Eval {
        /// Model descriptor: z, q, qs:2,3, lex(z,q), cone(q), gamma(qs:2), two.
        #[arg(long)]
        model: String,
        term: String,
        /// Assignments such as `x1=1/2` or `x1=(0,1/2)`.
        #[arg(long = "assign", short = 'a')]
        assign: Vec<String>,
    },
    /// Check statements in a witness algebra.
    Check {
        #[arg(long)]
        model: String,
        #[command(flatten)]
        input: StatementInput,
        /// Check only uniqueness of solutions.
        #[arg(long)]
        uniqueness: bool,
    },
    /// Query the lattices of classes and expansions.
    Lattice {
        #[arg(value_enum)]
        op: LatticeOp,
        /// Family `g` or `p` for class operations.
        #[arg(long, default_value = "g")]
        family: String,
        /// Classes (`trivial`, `boolean`, `div:2,3`, `div:*-2`) or expansions
        /// (`bal:2`, `lp:3`, `lp:classical`, `bal:inconsistent`).
        args: Vec<String>,
        /// Primes for `structure`.
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
    },
    /// Emit the axioms of a logic expansion such as `bal:2,3` or `lp:3`.
    Axioms { expansion: String },
    /// Run a property suite, or `all`.
    Selftest { suite: String },
}

impl Cli {
    pub fn budget_or_default(&self) -> usize {
        self.budget.unwrap_or(DEFAULT_BUDGET)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = commands::run(&cli);
    match result {
        Ok(out) => {
            out.emit(format);
            ExitCode::from(out.code)
        }
        Err(e) => {
            e.emit(format);
            ExitCode::from(e.code)
        }
    }
}
