mod bound;
mod enumerate;
mod examples;
mod invariants;

use clap::Subcommand;
use hypfib_core::rational::{approx, Rational};
use serde_json::{json, Map, Value};

use crate::args::CliError;
use crate::render::Output;
use crate::Opts;

pub use examples::ExamplesCommand;

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relative invariants from singularity indices, e.g. `g=7 s2=30 s6=1`.
    Invariants(invariants::Args),
    /// Every genus bound that applies to the given data.
    Bound(bound::Args),
    /// Exhaustive search over index vectors with fixed chi.
    Enumerate(enumerate::Args),
    /// Build and certify the sharpness examples.
    #[command(subcommand)]
    Examples(ExamplesCommand),
}

pub struct Outcome {
    pub output: Output,
    /// Whether every requested check passed.
    pub pass: bool,
}

impl Outcome {
    fn ok(output: Output) -> Self {
        Outcome { output, pass: true }
    }
}

pub fn run(cmd: &Command, opts: Opts) -> Result<Outcome, CliError> {
    match cmd {
        Command::Invariants(a) => invariants::run(a, opts),
        Command::Bound(a) => bound::run(a, opts),
        Command::Enumerate(a) => enumerate::run(a, opts),
        Command::Examples(c) => examples::run(c, opts),
    }
}

const DECIMAL_DIGITS: usize = 6;

pub(crate) fn dec(r: &Rational) -> String {
    approx(r, DECIMAL_DIGITS)
}

/// JSON block of display-only approximations, keyed by name.
pub(crate) fn decimal_block<'a>(values: impl IntoIterator<Item = (String, &'a Rational)>) -> Value {
    let mut m = Map::new();
    for (k, v) in values {
        m.insert(k, Value::String(dec(v)));
    }
    json!({ "non_authoritative": true, "values": m })
}

pub(crate) fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}
