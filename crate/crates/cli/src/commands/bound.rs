use hypfib_core::bounds::{self, GenusBound, Parity};
use hypfib_core::rational::{fmt_rational, int, Rational};
use serde_json::{json, Value};

use super::{dec, decimal_block, to_json, Outcome};
use crate::args::{rational_arg, CliError};
use crate::render::{Output, Table};
use crate::Opts;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Relative `chi_f`, as `p` or `p/q`.
    #[arg(long)]
    chi: String,

    /// Base genus.
    #[arg(long)]
    b: u32,

    /// Relative `K_f^2`.
    #[arg(long)]
    ksq: Option<String>,

    /// Slope `K_f^2 / chi_f`.
    #[arg(long)]
    lambda: Option<String>,

    /// The branch invariant `n`; needs `--lambda` (or `--ksq`).
    #[arg(long)]
    n: Option<i64>,

    /// Fiber genus, for the cap on `n`.
    #[arg(long)]
    g: Option<u32>,
}

/// `source` tag plus any payload, e.g. `sharp_in_n(n=2)`.
fn source_label(gb: &GenusBound) -> String {
    let v = to_json(&gb.source);
    let kind = v["kind"].as_str().unwrap_or("?").to_string();
    let extra: Vec<String> = v
        .as_object()
        .into_iter()
        .flatten()
        .filter(|(k, _)| k.as_str() != "kind")
        .map(|(k, v)| format!("{k}={}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())))
        .collect();
    if extra.is_empty() {
        kind
    } else {
        format!("{kind}({})", extra.join(","))
    }
}

pub fn run(a: &Args, opts: Opts) -> Result<Outcome, CliError> {
    let chi = rational_arg("chi", &a.chi)?;
    if chi <= int(0) {
        return Err(CliError::new("domain", "--chi must be positive"));
    }
    let ksq = a.ksq.as_deref().map(|s| rational_arg("ksq", s)).transpose()?;
    let mut lambda = a.lambda.as_deref().map(|s| rational_arg("lambda", s)).transpose()?;
    match (&ksq, &lambda) {
        (Some(k), Some(l)) if &(l * &chi) != k => {
            return Err(CliError::usage("--ksq and --lambda disagree: K^2 must equal lambda * chi"));
        }
        (Some(k), None) => lambda = Some(k / &chi),
        _ => {}
    }
    if a.n.is_some() && lambda.is_none() {
        return Err(CliError::usage("--n needs --lambda or --ksq"));
    }

    let mut list: Vec<GenusBound> = vec![bounds::bound_theorem31(&chi, a.b as i64, ksq.as_ref())?];
    if let Some(k) = &ksq {
        if k < &(int(4) * &chi) {
            list.push(bounds::slope_linear_bound(&chi, k)?);
        }
    }
    if let Some(l) = &lambda {
        if let Some(n) = a.n {
            list.push(bounds::sharp_bound(l, &chi, n)?);
        }
        for p in [Parity::Even, Parity::Odd] {
            list.push(bounds::large_genus_bound(l, &chi, p));
        }
    } else if a.b >= 1 {
        for p in [Parity::Even, Parity::Odd] {
            list.push(bounds::large_genus_bound_by_base(&chi, a.b, p)?);
        }
    }
    if a.b >= 2 {
        list.push(bounds::hodge_bound(&chi, a.b)?);
    }

    let n_cap: Option<Rational> = match (a.g, &lambda) {
        (Some(g), Some(l)) if l > &int(4) => Some(bounds::n_upper(l, &chi, g)?),
        _ => None,
    };

    let mut t = Table::new("genus bounds", &["source", "value", "floor", "in_domain", "note"]);
    for gb in &list {
        t.row(vec![
            source_label(gb),
            fmt_rational(&gb.value),
            gb.floor_value.to_string(),
            gb.in_domain.to_string(),
            gb.note.clone().unwrap_or_default(),
        ]);
    }
    let mut doc = json!({ "bounds": to_json(&list) });
    if let Some(c) = &n_cap {
        doc["n_upper"] = Value::String(fmt_rational(c));
    }
    let mut tables = vec![t];
    if let Some(c) = &n_cap {
        let mut nt = Table::new("cap on n", &["g", "n_upper", "floor"]);
        nt.row(vec![a.g.unwrap_or_default().to_string(), fmt_rational(c), c.floor().to_integer().to_string()]);
        tables.push(nt);
    }
    if opts.decimal {
        doc["decimal"] = decimal_block(list.iter().map(|gb| (source_label(gb), &gb.value)));
        let cells = list.iter().map(|gb| dec(&gb.value)).collect();
        tables[0].add_column("approx (non-authoritative)", cells);
    }
    Ok(Outcome::ok(Output {
        json: vec![doc],
        tables,
        ..Default::default()
    }))
}
