//! Command-line front end: expression parsing, subcommands and canonical
//! JSON output.

pub mod commands;
pub mod parse;

use clap::{Parser, Subcommand};
use qweyl_core::verify::Bounds;

use commands::{error_json, CliError};

#[derive(Debug, Parser)]
#[command(name = "qweyl", version, about = "Exact normal ordering in q- and h-deformed Weyl algebras and U(sl2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a word.
    Normalize {
        #[arg(long)]
        algebra: String,
        /// Use closed-form coordinates where available and check them
        /// against rewriting.
        #[arg(long)]
        closed_form: bool,
        expr: String,
    },
    /// Normal coordinates of a product of normal monomials.
    Coeffs {
        #[arg(long)]
        algebra: String,
        /// Exponent tuples, e.g. "(0,0,1),(2,0,0)".
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
    },
    /// Product in the symmetric power Symⁿ.
    Symprod {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        arity: usize,
        expr: String,
    },
    /// Run verification suites.
    Verify {
        /// representations, corollaries, oracle-equiv or all.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_exp: Option<u32>,
        #[arg(long)]
        max_factors: Option<usize>,
        #[arg(long)]
        max_t: Option<u32>,
    },
    /// Run criteria 1 to 9 at the default bounds.
    Selftest,
}

/// Runs one invocation; returns the document for stdout and the exit
/// status.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (e.to_string().trim_end().to_string(), 0);
            }
            let err = CliError::Usage(e.kind().to_string());
            return (error_json(&err), err.exit_status());
        }
    };
    match dispatch(cli.command) {
        Ok((doc, None)) => (doc, 0),
        Ok((doc, Some(err))) => (doc, err.exit_status()),
        Err(err) => (error_json(&err), err.exit_status()),
    }
}

fn dispatch(command: Command) -> Result<(String, Option<CliError>), CliError> {
    let ok = |doc: String| Ok((doc, None));
    match command {
        Command::Normalize {
            algebra,
            closed_form,
            expr,
        } => ok(commands::normalize(commands::algebra(&algebra)?, &expr, closed_form)?),
        Command::Coeffs { algebra, factors } => {
            ok(commands::coeffs(commands::algebra(&algebra)?, &factors)?)
        }
        Command::Symprod {
            algebra,
            arity,
            expr,
        } => ok(commands::symprod(commands::algebra(&algebra)?, arity, &expr)?),
        Command::Verify {
            suite,
            max_exp,
            max_factors,
            max_t,
        } => {
            let d = Bounds::default();
            let bounds = Bounds {
                max_exp: max_exp.unwrap_or(d.max_exp),
                max_factors: max_factors.unwrap_or(d.max_factors),
                max_t: max_t.unwrap_or(d.max_t),
                ..d
            };
            if bounds.max_factors == 0 {
                return Err(CliError::Usage("--max-factors must be at least 1".into()));
            }
            commands::verify(&suite, &bounds)
        }
        Command::Selftest => Ok(commands::selftest()),
    }
}
