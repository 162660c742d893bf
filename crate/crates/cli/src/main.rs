//! `mahonian`: Mahonian tables, the series `S_i`, `R`, `M`, `C`, exhaustive
//! enumerations, the bijections, and the verification suites.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage error or bound
//! exceeded, 3 precondition violation.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mahonian::verify::{self, Bounds, Suite};
use mahonian::Error;

use render::Output;

#[derive(Parser, Debug)]
#[command(name = "mahonian", version, about = "Permutations of [n] with n - i inversions")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Series truncation order.
    #[arg(long, global = true, env = verify::ORDER_ENV)]
    order: Option<usize>,

    /// Size bound: the exhaustive `n` for `verify`, the enumeration guard
    /// for `enumerate`.
    #[arg(long, global = true, env = verify::BOUND_ENV)]
    bound: Option<usize>,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rows 0..=N_MAX of the Mahonian triangle.
    Table { n_max: usize },

    /// Coefficients 0..=order of S_i, R, M or C.
    Series {
        /// S, S_<i>, R, M or C.
        name: String,
        /// Subscript for S when not given in the name.
        #[arg(long)]
        i: Option<usize>,
        /// S: dp, catalan-shift, via-r. R: product, inverse-one-minus-m,
        /// divisor-recursion.
        #[arg(long)]
        method: Option<String>,
    },

    /// Run a verification suite.
    Verify {
        /// all, series-identities, involutions, factorization or counts.
        #[arg(default_value = "all")]
        suite: String,
        /// Order for comparing the constructions of R.
        #[arg(long, env = verify::R_ORDER_ENV)]
        r_order: Option<usize>,
    },

    /// Apply a map to an element given in compact or JSON notation.
    Apply {
        #[arg(value_enum)]
        map: MapName,
        element: String,
        /// Also apply the inverse to the image and check the round trip.
        #[arg(long)]
        twice: bool,
        /// For `factor`: permutations of length n with n - i - 1 inversions.
        #[arg(long, default_value_t = 0)]
        i: usize,
    },

    /// List a finite set with its count and signed sum.
    Enumerate {
        #[arg(value_enum)]
        set: SetName,
        n: usize,
        /// Inversion count for `snk`.
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Phi,
    Psi,
    Theta,
    ThetaInverse,
    Factor,
    Mblocks,
    Cut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lower")]
pub enum SetName {
    Snk,
    Cn,
    Rn,
    Tn,
    Goodpairs,
    Fixphi,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Library(Error),
    /// The command ran but a check failed; the output is still printed.
    Verification(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IdentityViolation(_) => 1,
        Error::BoundExceeded { .. } | Error::Parse(_) => 2,
        _ => 3,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Table { n_max } => Ok(render::table(*n_max, cli.format)),
        Command::Series { name, i, method } => {
            let order = cli.order.unwrap_or(render::DEFAULT_SERIES_ORDER);
            render::series(name, *i, method.as_deref(), order, cli.format)
        }
        Command::Verify { suite, r_order } => {
            let suite: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let defaults = Bounds::default();
            let bounds = Bounds {
                order: cli.order.unwrap_or(defaults.order),
                n: cli.bound.unwrap_or(defaults.n),
                r_order: r_order.unwrap_or(defaults.r_order),
            };
            let report = verify::run_suite(suite, &bounds);
            let out = render::report(&report, cli.format);
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Apply {
            map,
            element,
            twice,
            i,
        } => render::apply(*map, element, *twice, *i, cli.format),
        Command::Enumerate { set, n, k } => render::enumerate(*set, *n, *k, cli.bound, cli.format),
    }
}

fn emit(cli: &Cli, out: &Output) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, out.as_str()),
        None => io::stdout().lock().write_all(out.as_str().as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli) {
        Ok(out) => (Some(out), 0),
        Err(Failure::Verification(out)) => (Some(out), 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (None, 2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            (None, exit_code(&e))
        }
    };
    if let Some(out) = out {
        if let Err(e) = emit(&cli, &out) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
