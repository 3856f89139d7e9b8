//! `gamma-euler`: exact Γ-Euler characteristics from the command line.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit status: 0 success,
//! 2 bad input, 3 unsupported or over budget, 4 internal cross-check failure.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "gamma-euler",
    version,
    about = "Exact Γ-Euler characteristics of translation groupoids"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subset {
    Sphere,
    Ball,
    Shell,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Unitary circle representation given by its weights.
    #[command(name = "s1-rep")]
    S1Rep {
        /// Comma-separated integer weights, e.g. -6,2,3.
        #[arg(short, long, allow_hyphen_values = true)]
        weights: String,
        /// Γ: Z, Z^l, Fl or fp:gens|relators.
        #[arg(short, long)]
        gamma: String,
        /// Treat V as real, adding d trivial real dimensions.
        #[arg(long, value_name = "D")]
        real: Option<u32>,
        /// Evaluate on a subset of V instead of V itself.
        #[arg(long, value_enum)]
        subset: Option<Subset>,
        /// Emit the stratification and check its sum against the formula.
        #[arg(long)]
        strata: bool,
    },
    /// O(2) representation (⊕ τ_α) ⊕ d·det.
    #[command(name = "o2-rep")]
    O2Rep {
        /// Comma-separated positive indices α_i.
        #[arg(short, long, allow_hyphen_values = true)]
        alphas: String,
        /// Multiplicity of det.
        #[arg(short, long, default_value_t = 0)]
        det: u32,
        #[arg(short, long)]
        gamma: String,
        /// Use the real points V_R.
        #[arg(long)]
        real: bool,
        #[arg(long)]
        strata: bool,
        /// Known χ(O(2)\Hom(Γ,O(2))) for a Γ without a closed form, as GAMMA=VALUE.
        #[arg(long = "o2-value", value_name = "GAMMA=VALUE")]
        o2_values: Vec<String>,
    },
    /// Linear symplectic quotient at level 0 of any representation of G.
    Symplectic {
        /// S1, O2, cyclic:m, dihedral:m, SU2 or user:NAME.
        #[arg(short = 'G', long = "group")]
        group: String,
        #[arg(short, long)]
        gamma: String,
        /// Value table for user:NAME, as GAMMA=VALUE.
        #[arg(long = "user-value", value_name = "GAMMA=VALUE")]
        user_values: Vec<String>,
    },
    /// χ(H\Hom(Γ,H)) for a single group H.
    #[command(name = "hom-orbits")]
    HomOrbits {
        /// cyclic:m, dihedral:m or O2.
        #[arg(short, long)]
        target: String,
        #[arg(short, long)]
        gamma: String,
        /// Recompute by an independent route and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the built-in cross-check corpus.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap on enumerated tuples per homomorphism search.
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::S1Rep {
            weights,
            gamma,
            real,
            subset,
            strata,
        } => commands::s1_rep(&weights, &gamma, real, subset, strata, format),
        Command::O2Rep {
            alphas,
            det,
            gamma,
            real,
            strata,
            o2_values,
        } => commands::o2_rep(&alphas, det, &gamma, real, strata, &o2_values, format),
        Command::Symplectic {
            group,
            gamma,
            user_values,
        } => commands::symplectic(&group, &gamma, &user_values, format),
        Command::HomOrbits { target, gamma, oracle } => commands::hom_orbits(&target, &gamma, oracle, format),
        Command::Verify { suite, budget } => commands::verify(&suite, budget, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
