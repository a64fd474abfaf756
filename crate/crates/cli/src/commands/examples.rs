use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use hypfib_core::rational::fmt_rational;
use hypfib_core::ruled_surface::{
    build_example, certificate, claim_line_bundle, families::params_text, min_l_dot_d, AmplenessReport,
    ExampleData, Family, SearchBox, SharpnessReport,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{dec, decimal_block, to_json, Outcome};
use crate::args::CliError;
use crate::config::SweepConfig;
use crate::render::{Output, Table};
use crate::Opts;

/// Ampleness evidence counts as passing when every candidate has `L·D >= 2`.
const AMPLE_THRESHOLD: i64 = 2;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Ex51,
    Ex52,
    Ex53,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct BoxArgs {
    /// Run the `L·D` search for the line bundle `R~ - K~`.
    #[arg(long)]
    ampleness: bool,

    /// Brute-force box for the section and fiber coefficients.
    #[arg(long)]
    box_coeff: Option<i64>,

    /// Brute-force box for the exceptional multiplicity.
    #[arg(long)]
    box_beta: Option<i64>,

    /// Extended box, scanned at extremal multiplicities only.
    #[arg(long)]
    box_extended: Option<i64>,
}

impl BoxArgs {
    fn apply(&self, mut b: SearchBox) -> SearchBox {
        b.coeff = self.box_coeff.unwrap_or(b.coeff);
        b.beta = self.box_beta.unwrap_or(b.beta);
        b.extended = self.box_extended.unwrap_or(b.extended);
        b
    }
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    family: FamilyArg,

    #[arg(long)]
    k: Option<u32>,

    /// Torsion order for ex51; defaults to k + 2.
    #[arg(long)]
    m: Option<u32>,

    #[arg(long)]
    n: Option<u32>,

    #[arg(long)]
    chi: Option<u32>,

    #[command(flatten)]
    search: BoxArgs,
}

#[derive(clap::Args, Debug)]
pub struct SweepArgs {
    /// TOML file listing the parameters to sweep.
    #[arg(long)]
    config: PathBuf,

    /// Skip the ampleness search even if the config enables it.
    #[arg(long, conflicts_with = "ampleness")]
    no_ampleness: bool,

    #[command(flatten)]
    search: BoxArgs,
}

#[derive(Subcommand, Debug)]
pub enum ExamplesCommand {
    /// Build one example and check it.
    Verify(VerifyArgs),
    /// Check every example listed in a config file.
    Sweep(SweepArgs),
}

#[derive(Debug, Serialize)]
struct Verified {
    example: ExampleData,
    sharpness: SharpnessReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    ampleness: Option<AmplenessReport>,
    pass: bool,
}

fn family_from(a: &VerifyArgs) -> Result<Family, CliError> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| CliError::usage(format!("--{flag} is required here")));
    let reject = |present: bool, flag: &str| {
        if present {
            Err(CliError::usage(format!("--{flag} does not apply to this family")))
        } else {
            Ok(())
        }
    };
    Ok(match a.family {
        FamilyArg::Ex51 => {
            reject(a.n.is_some(), "n")?;
            reject(a.chi.is_some(), "chi")?;
            let k = need(a.k, "k")?;
            Family::Ex51 { k, m: a.m.unwrap_or(k + 2) }
        }
        FamilyArg::Ex52 => {
            reject(a.m.is_some(), "m")?;
            reject(a.n.is_some(), "n")?;
            reject(a.chi.is_some(), "chi")?;
            Family::Ex52 { k: need(a.k, "k")? }
        }
        FamilyArg::Ex53 => {
            reject(a.k.is_some(), "k")?;
            reject(a.m.is_some(), "m")?;
            Family::Ex53 {
                n: need(a.n, "n")?,
                chi: need(a.chi, "chi")?,
            }
        }
    })
}

fn verify(f: Family, search: Option<SearchBox>) -> Result<Verified, CliError> {
    let example = build_example(f)?;
    let sharpness = hypfib_core::ruled_surface::verify_sharpness(&example)?;
    let ampleness = search
        .map(|b| min_l_dot_d(&example.surface, &claim_line_bundle(&example), &b))
        .transpose()?;
    let pass = sharpness.pass && ampleness.as_ref().is_none_or(|r| r.min >= AMPLE_THRESHOLD);
    Ok(Verified {
        example,
        sharpness,
        ampleness,
        pass,
    })
}

fn ampleness_text(ex: &ExampleData, r: &AmplenessReport) -> String {
    let mut out = String::new();
    let l = claim_line_bundle(ex);
    let _ = writeln!(out, "  line bundle  L = {}", l.render(&ex.surface));
    let _ = writeln!(out, "  box          {}", r.box_text);
    let _ = writeln!(
        out,
        "  min L.D      {} at D = {} ({} candidates in the first pass)",
        r.min,
        r.witness.render(&ex.surface),
        r.candidates
    );
    let _ = writeln!(
        out,
        "  evidence     {}",
        if r.min >= AMPLE_THRESHOLD { "L.D >= 2 in box" } else { "L.D < 2 found" }
    );
    out
}

fn run_verify(a: &VerifyArgs, opts: Opts) -> Result<Outcome, CliError> {
    let f = family_from(a)?;
    let search = a.search.ampleness.then(|| a.search.apply(SearchBox::default()));
    let v = verify(f, search)?;

    let mut text = certificate(&v.example, &v.sharpness);
    let mut checks = Table::new("checks", &["check", "lhs", "rhs", "pass", "note"]);
    for c in &v.sharpness.checks {
        checks.row(vec![
            c.name.clone(),
            c.lhs.clone(),
            c.rhs.clone(),
            c.pass.to_string(),
            c.note.clone().unwrap_or_default(),
        ]);
    }
    let mut tables = vec![checks];
    if let Some(r) = &v.ampleness {
        text.push_str(&ampleness_text(&v.example, r));
        let mut t = Table::new("ampleness evidence", &["min", "witness", "min_brute", "min_extended", "box"]);
        t.row(vec![
            r.min.to_string(),
            r.witness.render(&v.example.surface),
            r.min_brute.to_string(),
            r.min_extended.to_string(),
            r.box_text.clone(),
        ]);
        tables.push(t);
    }
    let mut doc = to_json(&v);
    doc["certificate"] = json!(text);
    if opts.decimal {
        if let Some(l) = &v.sharpness.lambda {
            doc["decimal"] = decimal_block([("lambda".to_string(), l)]);
        }
    }
    Ok(Outcome {
        pass: v.pass,
        output: Output {
            json: vec![doc],
            tables,
            text: Some(text),
            ..Default::default()
        },
    })
}

fn run_sweep(a: &SweepArgs, opts: Opts) -> Result<Outcome, CliError> {
    let cfg = SweepConfig::load(&a.config)?;
    let families = cfg.families();
    if families.is_empty() {
        return Err(CliError::new("empty_range", "the sweep config lists no examples"));
    }
    let enabled = !a.no_ampleness && (a.search.ampleness || cfg.ampleness.enabled);
    let search = enabled.then(|| a.search.apply(cfg.ampleness.search_box()));
    let results: Vec<(Family, Result<Verified, CliError>)> =
        families.par_iter().map(|&f| (f, verify(f, search))).collect();

    let mut headers = vec!["family", "params", "g", "chi", "ksq", "n", "lambda", "sharp"];
    if search.is_some() {
        headers.push("min L.D");
    }
    headers.push("result");
    let mut t = Table::new("example sweep", &headers);
    let mut rows_json = Vec::new();
    let mut all_pass = true;
    for (f, r) in &results {
        match r {
            Ok(v) => {
                all_pass &= v.pass;
                let s = &v.sharpness;
                let lambda = s.lambda.as_ref().map(fmt_rational).unwrap_or_default();
                let mut row = vec![
                    f.tag().to_string(),
                    params_text(f),
                    s.g.to_string(),
                    fmt_rational(&s.chi),
                    fmt_rational(&s.ksq),
                    fmt_rational(&s.n),
                    lambda,
                    if s.pass { "ok" } else { "FAIL" }.to_string(),
                ];
                if let Some(amp) = &v.ampleness {
                    row.push(amp.min.to_string());
                }
                row.push(if v.pass { "PASS" } else { "FAIL" }.to_string());
                t.row(row);
                let mut j = json!({
                    "family": to_json(f),
                    "g": s.g,
                    "chi": fmt_rational(&s.chi),
                    "ksq": fmt_rational(&s.ksq),
                    "n": fmt_rational(&s.n),
                    "lambda": s.lambda.as_ref().map(fmt_rational),
                    "sharpness": s.pass,
                    "failed_checks": s.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect::<Vec<_>>(),
                    "pass": v.pass,
                });
                if let Some(amp) = &v.ampleness {
                    j["ampleness"] = json!({ "min": amp.min, "witness": to_json(&amp.witness) });
                }
                if opts.decimal {
                    if let Some(l) = &s.lambda {
                        j["decimal"] = decimal_block([("lambda".to_string(), l)]);
                    }
                }
                rows_json.push(j);
            }
            Err(e) => {
                all_pass = false;
                let mut row = vec![f.tag().to_string(), params_text(f)];
                row.resize(headers.len() - 1, "-".into());
                row.push(format!("ERROR {}", e.kind));
                t.row(row);
                rows_json.push(json!({
                    "family": to_json(f),
                    "error": { "kind": e.kind, "message": e.message },
                    "pass": false,
                }));
            }
        }
    }
    if opts.decimal {
        let cells = results
            .iter()
            .map(|(_, r)| {
                r.as_ref()
                    .ok()
                    .and_then(|v| v.sharpness.lambda.as_ref().map(dec))
                    .unwrap_or_default()
            })
            .collect();
        t.add_column("lambda approx (non-authoritative)", cells);
    }
    let passed = rows_json.iter().filter(|r| r["pass"] == true).count();
    let doc = json!({
        "results": rows_json,
        "passed": passed,
        "total": results.len(),
        "box": search.map(|b| b.describe()),
        "pass": all_pass,
    });
    Ok(Outcome {
        pass: all_pass,
        output: Output {
            json: vec![doc],
            tables: vec![t],
            ..Default::default()
        },
    })
}

pub fn run(c: &ExamplesCommand, opts: Opts) -> Result<Outcome, CliError> {
    match c {
        ExamplesCommand::Verify(a) => run_verify(a, opts),
        ExamplesCommand::Sweep(a) => run_sweep(a, opts),
    }
}
