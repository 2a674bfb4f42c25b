//! `tsl`: describe presentations, compute tensor squares, build the group
//! families and run the claims ledger.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use tsl_core::coset::{EnumerationBudget, BUDGET_ENV};

#[derive(Parser, Debug)]
#[command(name = "tsl", version, about = "Nonabelian tensor squares and the claims ledger")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Coset limit for every enumeration.
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = EnumerationBudget::default().max_cosets)]
    pub max_cosets: usize,
    /// Time limit in seconds for every enumeration.
    #[arg(long, global = true, default_value_t = EnumerationBudget::default().max_time.as_secs())]
    pub max_time: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Nu,
    Definitional,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Symbolic,
    Quotient,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generators, relators, abelianization and order of a presentation file.
    Describe {
        /// Presentation file, or `-` for standard input.
        file: PathBuf,
    },
    /// The tensor square of a finite group with its diagram checks.
    Tensor {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Nu)]
        method: MethodArg,
    },
    /// Emit a family presentation, or its finite quotient.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// The claims ledger.
    Claims {
        #[command(subcommand)]
        action: ClaimsCmd,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FamilyOut {
    /// Compute the tensor square of the emitted group.
    #[arg(long)]
    pub tensor: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Nu)]
    pub method: MethodArg,
    /// Write the presentation here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    /// Crystallographic group `C_n ⋉ Z^(n-1)`.
    Gn {
        #[arg(long)]
        n: u64,
        /// Reduce the lattice modulo `m`.
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Coclass group `K_s`, optionally reduced modulo `p^k`.
    Ks {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long = "mod-exp")]
        mod_exp: Option<u32>,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Bieberbach group `B_1(n)`.
    B1 {
        #[arg(long)]
        n: u64,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[command(flatten)]
        out: FamilyOut,
    },
}

#[derive(Subcommand, Debug)]
pub enum ClaimsCmd {
    /// Run the registered claims.
    Run {
        /// Comma-separated claim ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
        /// Fail on any MISMATCH outside the known discrepancies.
        #[arg(long)]
        strict_consistent: bool,
    },
    /// List claim ids with their statements.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
