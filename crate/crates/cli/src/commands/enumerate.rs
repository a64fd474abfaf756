use clap::ValueEnum;
use hypfib_core::enumerator::{self, Classification, FeasibleCase, S2Mode, SearchSpec, SlopeCap, DEFAULT_G_MAX};
use hypfib_core::rational::{fmt_rational, int};
use serde_json::json;

use super::{dec, decimal_block, to_json, Outcome};
use crate::args::{parse_range, rational_arg, CliError};
use crate::render::{Output, Table};
use crate::Opts;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum S2Arg {
    #[value(alias = "nonneg")]
    NonNegative,
    Negative,
    /// Both signs; same as the union of the other two modes.
    Any,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long, default_value = "1")]
    chi: String,

    #[arg(long, default_value_t = 1)]
    b: u32,

    /// Genus range `lo..hi`, inclusive.
    #[arg(long)]
    g: Option<String>,

    #[arg(long, value_enum, default_value = "non-negative")]
    s2: S2Arg,

    /// Slope cap: `my9`, `hyperelliptic`, or a rational. Default follows `b`.
    #[arg(long)]
    cap: Option<String>,

    /// Only require `n` to be a positive integer.
    #[arg(long)]
    no_parity: bool,

    /// Keep only `lo <= K^2 <= hi`.
    #[arg(long)]
    ksq: Option<String>,

    /// Print the `(K^2, g)` classification for `chi = 1`, `b = 1`.
    #[arg(long)]
    table: bool,
}

fn spec_from(a: &Args) -> Result<SearchSpec, CliError> {
    let chi = rational_arg("chi", &a.chi)?;
    let (lo, hi) = match &a.g {
        Some(s) => parse_range::<u32>("g", s)?,
        None => (2, DEFAULT_G_MAX),
    };
    let mut spec = SearchSpec::new(chi, a.b).genus_range(lo, hi).parity(!a.no_parity).mode(match a.s2 {
        S2Arg::NonNegative => S2Mode::NonNegative,
        S2Arg::Negative => S2Mode::Negative,
        S2Arg::Any => S2Mode::Any,
    });
    if let Some(c) = &a.cap {
        spec.slope_cap = match c.as_str() {
            "my9" | "miyaoka-yau" => SlopeCap::MiyaokaYau9,
            "hyperelliptic" => SlopeCap::HyperellipticCap,
            other => SlopeCap::Custom(rational_arg("cap", other)?),
        };
    }
    if let Some(k) = &a.ksq {
        let (lo, hi) = parse_range::<i64>("ksq", k)?;
        spec = spec.ksq_between(lo, hi);
    }
    spec.validate()?;
    Ok(spec)
}

fn cases_table(cases: &[FeasibleCase], decimal: bool) -> Table {
    let mut t = Table::new("feasible cases", &["g", "ksq", "n", "chi", "e", "lambda", "indices"]);
    for c in cases {
        let num = &c.numerics;
        t.row(vec![
            c.g.to_string(),
            c.ksq.to_string(),
            c.n.to_string(),
            fmt_rational(&num.chi),
            fmt_rational(&num.e),
            num.lambda.as_ref().map(fmt_rational).unwrap_or_default(),
            c.indices.to_string(),
        ]);
    }
    if decimal {
        let cells = cases
            .iter()
            .map(|c| c.numerics.lambda.as_ref().map(dec).unwrap_or_default())
            .collect();
        t.add_column("lambda approx (non-authoritative)", cells);
    }
    t
}

fn projection_table(table: &enumerator::KsqGenusTable) -> Table {
    let mut t = Table::new("(K^2, g) pairs", &["ksq", "g"]);
    for (k, gs) in table.iter().rev() {
        let list: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
        t.row(vec![k.to_string(), list.join(",")]);
    }
    t
}

fn run_table(a: &Args) -> Result<Outcome, CliError> {
    let chi = rational_arg("chi", &a.chi)?;
    if chi != int(1) || a.b != 1 || a.g.is_some() || a.ksq.is_some() || a.cap.is_some() {
        return Err(CliError::usage(
            "--table is the fixed chi = 1, b = 1 classification; drop --g, --ksq, --cap and other chi/b",
        ));
    }
    let Classification {
        table,
        cases,
        discrepancy,
    } = enumerator::classify_pg_q_1()?;
    let expected = enumerator::expected_pg_q_1_table();
    let mut t = projection_table(&table);
    t.title = "classification for p_g = q = 1".into();
    let reference: Vec<String> = table
        .keys()
        .rev()
        .map(|k| {
            expected
                .get(k)
                .map(|gs| gs.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","))
                .unwrap_or_default()
        })
        .collect();
    t.add_column("reference", reference);
    let mut d = Table::new("discrepancies", &["ksq", "g", "kind", "witnesses", "survives"]);
    for x in &discrepancy.extra {
        let wit: Vec<String> = x.witnesses.iter().map(|c| c.indices.to_string()).collect();
        d.row(vec![
            x.ksq.to_string(),
            x.g.to_string(),
            "extra".into(),
            wit.join("; "),
            x.survived.join(","),
        ]);
    }
    for (k, g) in &discrepancy.missing {
        d.row(vec![k.to_string(), g.to_string(), "missing".into(), String::new(), String::new()]);
    }
    let doc = json!({
        "table": to_json(&table),
        "reference": to_json(&expected),
        "discrepancy": to_json(&discrepancy),
        "case_count": cases.len(),
        "max_genus": cases.iter().map(|c| c.g).max(),
    });
    Ok(Outcome::ok(Output {
        json: vec![doc],
        tables: vec![t, d],
        ..Default::default()
    }))
}

pub fn run(a: &Args, opts: Opts) -> Result<Outcome, CliError> {
    if a.table {
        return run_table(a);
    }
    let spec = spec_from(a)?;
    let cases = enumerator::enumerate(&spec)?;
    let table = enumerator::project(&cases);
    let mut lines: Vec<serde_json::Value> = cases
        .iter()
        .map(|c| {
            let mut v = to_json(c);
            if opts.decimal {
                if let Some(l) = &c.numerics.lambda {
                    v["decimal"] = decimal_block([("lambda".to_string(), l)]);
                }
            }
            v
        })
        .collect();
    lines.push(json!({
        "summary": {
            "spec": to_json(&spec),
            "count": cases.len(),
            "max_genus": cases.iter().map(|c| c.g).max(),
            "pairs": to_json(&table),
        }
    }));
    let mut summary = Table::new("summary", &["count", "max_genus"]);
    summary.row(vec![
        cases.len().to_string(),
        cases.iter().map(|c| c.g).max().map(|g| g.to_string()).unwrap_or_else(|| "none".into()),
    ]);
    Ok(Outcome::ok(Output {
        json: lines,
        json_lines: true,
        tables: vec![cases_table(&cases, opts.decimal), projection_table(&table), summary],
        ..Default::default()
    }))
}
