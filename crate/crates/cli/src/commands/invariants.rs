use hypfib_core::invariants::{numerics_with, SingularityIndices};
use hypfib_core::rational::fmt_rational;
use serde_json::json;

use super::{dec, decimal_block, to_json, Outcome};
use crate::args::CliError;
use crate::render::{Output, Table};
use crate::Opts;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// `g=<genus>` and `s<j>=<value>` tokens.
    #[arg(required = true, num_args = 1..)]
    indices: Vec<String>,

    /// Base genus.
    #[arg(long, default_value_t = 1)]
    b: u32,

    /// Only require `n` to be a positive integer (skip the odd-g parity test).
    #[arg(long)]
    no_parity: bool,
}

pub fn run(a: &Args, opts: Opts) -> Result<Outcome, CliError> {
    let si: SingularityIndices = a.indices.join(" ").parse()?;
    let num = numerics_with(&si, a.b, !a.no_parity)?;
    let surface = num.surface();

    let mut doc = json!({
        "indices": to_json(&si),
        "numerics": to_json(&num),
        "surface": to_json(&surface),
    });
    let mut t = Table::new("invariants", &["quantity", "value"]);
    let rows = [
        ("g", num.g.to_string()),
        ("b", num.b.to_string()),
        ("n", fmt_rational(&num.n)),
        ("chi", fmt_rational(&num.chi)),
        ("ksq", fmt_rational(&num.ksq)),
        ("e", fmt_rational(&num.e)),
        ("lambda", num.lambda.as_ref().map(fmt_rational).unwrap_or_else(|| "-".into())),
        ("chi(O_S)", fmt_rational(&surface.chi)),
        ("K_S^2", fmt_rational(&surface.ksq)),
        ("e(S)", fmt_rational(&surface.euler)),
    ];
    for (k, v) in rows {
        t.row(vec![k.to_string(), v]);
    }
    if opts.decimal {
        if let Some(l) = &num.lambda {
            doc["decimal"] = decimal_block([("lambda".to_string(), l)]);
            t.row(vec!["lambda (approx, non-authoritative)".into(), dec(l)]);
        }
    }
    Ok(Outcome::ok(Output {
        json: vec![doc],
        tables: vec![t],
        ..Default::default()
    }))
}
