mod observables;
mod potentials;
mod roots;
mod spectrum;
mod spinbasis;

use std::fmt;

use crate::cli::{Cli, Command};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_NUMERICAL: u8 = 2;

/// Invalid input detected by the front end itself.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// A numerical failure reported after the dataset was written.
#[derive(Debug)]
pub struct NumericalFailure(pub String);

impl fmt::Display for NumericalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for NumericalFailure {}

pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<hyperspin::Error>() {
            return match e {
                hyperspin::Error::InvalidArgument(_) | hyperspin::Error::Regime { .. } => EXIT_USAGE,
                _ => EXIT_NUMERICAL,
            };
        }
    }
    EXIT_NUMERICAL
}

pub fn run(cli: &Cli) -> anyhow::Result<()> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Roots(args) => roots::run(args, out),
        Command::Potentials(args) => potentials::run(args, out),
        Command::Observables(args) => observables::run(args, out),
        Command::Spectrum(args) => spectrum::run(args, out),
        Command::Spinbasis(args) => spinbasis::run(args, out),
    }
}

pub(crate) fn axis(x: f64) -> &'static str {
    if x < 0.0 {
        "imaginary"
    } else {
        "real"
    }
}
