//! Command-line surface of the exact Hessian toolkit.
//!
//! Every subcommand takes `--input` (a file path or an inline value),
//! chooses text or JSON output with `--text`/`--json`, and writes to stdout
//! or `--out`. Exit codes: 0 success/pass, 1 rejected/fail, 2 inconclusive,
//! 3 usage error, 4 budget exceeded.

mod json;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hessmap_core::differential::{dhessian, kernel};
use hessmap_core::error::Error;
use hessmap_core::families::verify_counterexample;
use hessmap_core::groups::invariant_space_degree_d;
use hessmap_core::hessian::{hessian_det, monomial_hessian_analyze};
use hessmap_core::jacobian::{is_smooth, jacobian_ideal};
use hessmap_core::pipeline::{explore_monomial_hessian, kayal_check, KayalStatus};
use hessmap_core::poly::MultiPoly;
use hessmap_core::rational::parse_rational;
use hessmap_core::verify;

#[derive(Parser)]
#[command(
    name = "hessmap",
    about = "Exact Hessian determinants of forms, their differentials, and the power-sum equivalence pipeline",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input value: a file path or an inline literal (polynomial text
    /// grammar, or JSON where documented).
    #[arg(long)]
    input: Option<String>,
    /// Emit JSON.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (default).
    #[arg(long)]
    text: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Pad/validate the polynomial to this number of variables.
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Hessian determinant of a form, with the monomial-shape report.
    Hessian(IoArgs),
    /// Differential of the Hessian map at --input, applied to --g.
    Dhess {
        #[command(flatten)]
        io: IoArgs,
        /// The direction form g.
        #[arg(long)]
        g: String,
    },
    /// Exact kernel of the differential at a form.
    Kernel(IoArgs),
    /// Equivalence check against a sum of independent d-th powers.
    Kayal {
        #[command(flatten)]
        io: IoArgs,
        /// Optional candidate linear forms, ';'-separated (or a file).
        #[arg(long)]
        candidates: Option<String>,
    },
    /// Classification of singular binary forms with central-monomial
    /// Hessian for the given degree (--input holds the degree).
    ClassifyBinary(IoArgs),
    /// Verify one member of the block counterexample family;
    /// --input is {"n":..,"d":..,"q":..}.
    Counterexample(IoArgs),
    /// Basis of the degree --degree invariants of G(d,e,n);
    /// --input is {"d":..,"e":..,"n":..}.
    Invariants {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Jacobian ideal generators and the exact smoothness report.
    Jacobian(IoArgs),
    /// Enumerate forms with monomial Hessians; --input is
    /// {"nvars":..,"degree":..,"coeffs":[..],"support_budget":..}.
    Explore(IoArgs),
    /// Re-verify the full identity suite and print the report.
    VerifyPaper(IoArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn read_input(io: &IoArgs) -> Result<String, Error> {
    let raw = io
        .input
        .as_ref()
        .ok_or_else(|| Error::DomainError("--input is required".into()))?;
    resolve(raw)
}

/// File contents when the value names a readable file, else the value itself.
fn resolve(raw: &str) -> Result<String, Error> {
    let path = std::path::Path::new(raw);
    if path.is_file() {
        fs::read_to_string(path)
            .map_err(|e| Error::DomainError(format!("cannot read {}: {e}", path.display())))
    } else {
        Ok(raw.to_string())
    }
}

fn emit(io: &IoArgs, text: String, value: Value) -> Result<(), Error> {
    let body = if io.json {
        format!("{:#}\n", value)
    } else {
        text
    };
    match &io.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::DomainError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn input_poly(io: &IoArgs) -> Result<MultiPoly, Error> {
    json::poly_from_input(&read_input(io)?, io.nvars)
}

fn input_json(io: &IoArgs) -> Result<Value, Error> {
    serde_json::from_str(&read_input(io)?).map_err(|e| Error::ParseError {
        position: 0,
        message: format!("invalid JSON: {e}"),
    })
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Hessian(io) => {
            let f = input_poly(&io)?;
            let h = hessian_det(&f);
            let report = monomial_hessian_analyze(&f).ok();
            let mut text = format!("H(f) = {h}\n");
            if let Some(r) = &report {
                text.push_str(&format!(
                    "monomial: {}; central shape: {}\n",
                    r.is_monomial, r.is_question1_shape
                ));
            }
            emit(
                &io,
                text,
                json!({
                    "hessian": json::poly_to_value(&h),
                    "report": report
                        .as_ref()
                        .map(json::monomial_report_to_value)
                        .unwrap_or(Value::Null),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dhess { io, g } => {
            let f = input_poly(&io)?;
            let g = json::poly_from_input(&resolve(&g)?, Some(f.nvars()))?;
            let image = dhessian(&f, &g)?;
            emit(
                &io,
                format!("{image}\n"),
                json!({ "image": json::poly_to_value(&image) }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel(io) => {
            let f = input_poly(&io)?;
            let report = kernel(&f)?;
            emit(&io, render::kernel_text(&report), json::kernel_report_to_value(&report))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kayal { io, candidates } => {
            let g = input_poly(&io)?;
            let cands = match candidates {
                Some(raw) => Some(
                    resolve(&raw)?
                        .split(';')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| json::poly_from_input(s, Some(g.nvars())))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                None => None,
            };
            let result = kayal_check(&g, cands.as_deref())?;
            emit(&io, render::kayal_text(&result), json::kayal_result_to_value(&result))?;
            Ok(match result.status {
                KayalStatus::Equivalent => ExitCode::SUCCESS,
                KayalStatus::Rejected => ExitCode::from(1),
                KayalStatus::Inconclusive => ExitCode::from(2),
            })
        }
        Command::ClassifyBinary(io) => {
            let d: u32 = read_input(&io)?
                .trim()
                .parse()
                .map_err(|_| Error::DomainError("--input must hold the degree".into()))?;
            let c = hessmap_core::binary::classify_singular_monomial_hessian(d)?;
            let text = match &c.family_description {
                Some(fam) => format!("degree {d}: central monomial family {fam}\n"),
                None => format!("degree {d}: no singular solutions\n"),
            };
            emit(&io, text, json::classification_to_value(&c))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Counterexample(io) => {
            let v = input_json(&io)?;
            let obj = v
                .as_object()
                .ok_or_else(|| Error::DomainError("expected {\"n\",\"d\",\"q\"}".into()))?;
            let get = |k: &str| {
                obj.get(k)
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::DomainError(format!("missing \"{k}\"")))
            };
            let spec = hessmap_core::families::CounterexampleSpec::new(
                get("n")? as usize,
                get("d")? as u32,
                get("q")? as usize,
            )?;
            let record = verify_counterexample(&spec)?;
            let text = format!(
                "n={} d={} q={}: alpha = {}, central shape: {}, singular: {} -> {}\n",
                spec.n,
                spec.d,
                spec.q,
                record.alpha,
                record.hessian_shape_ok,
                record.singular,
                if record.pass { "pass" } else { "FAIL" }
            );
            let pass = record.pass;
            emit(&io, text, json::counterexample_record_to_value(&record))?;
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Invariants { io, degree } => {
            let spec = json::group_spec_from_value(&input_json(&io)?)?;
            let basis = invariant_space_degree_d(&spec, degree)?;
            let mut text = format!(
                "G({},{},{}) degree-{degree} invariants: dimension {}\n",
                spec.d,
                spec.e,
                spec.n,
                basis.len()
            );
            for b in &basis {
                text.push_str(&format!("  {b}\n"));
            }
            emit(
                &io,
                text,
                json!({
                    "spec": {"d": spec.d, "e": spec.e, "n": spec.n},
                    "degree": degree,
                    "basis": basis.iter().map(json::poly_to_value).collect::<Vec<_>>(),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Jacobian(io) => {
            let g = input_poly(&io)?;
            let ideal = jacobian_ideal(&g)?;
            let report = is_smooth(&g)?;
            // when the ideal is monomial, also expose it as a monomial ideal
            // together with its quotient dimension
            let monomial_view = ideal
                .iter()
                .filter(|p| !p.is_zero())
                .map(|p| p.monomial_form().map(|(_, m)| m))
                .collect::<Option<Vec<_>>>()
                .map(|gens| hessmap_core::jacobian::MonomialIdeal::new(g.nvars(), gens));
            let mut text = String::new();
            for (i, p) in ideal.iter().enumerate() {
                text.push_str(&format!("d/dx{}: {p}\n", i + 1));
            }
            text.push_str(&format!(
                "smooth: {} (rank {}/{} in degree {})\n",
                report.is_smooth, report.rank, report.full_rank_needed, report.witness_degree
            ));
            if let Some(ideal) = &monomial_view {
                let count = hessmap_core::jacobian::standard_monomial_count(ideal);
                text.push_str(&format!(
                    "monomial ideal; standard monomials: {}\n",
                    count.map(|c| c.to_string()).unwrap_or_else(|| "infinite".into())
                ));
            }
            emit(
                &io,
                text,
                json!({
                    "ideal": ideal.iter().map(json::poly_to_value).collect::<Vec<_>>(),
                    "smoothness": json::smoothness_to_value(&report),
                    "monomial_ideal": monomial_view
                        .as_ref()
                        .map(json::ideal_to_value)
                        .unwrap_or(Value::Null),
                    "standard_monomial_count": monomial_view
                        .as_ref()
                        .and_then(hessmap_core::jacobian::standard_monomial_count)
                        .map(|c| json!(c))
                        .unwrap_or(Value::Null),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Explore(io) => {
            let v = input_json(&io)?;
            let obj = v.as_object().ok_or_else(|| {
                Error::DomainError(
                    "expected {\"nvars\",\"degree\",\"coeffs\",\"support_budget\"}".into(),
                )
            })?;
            let nvars = obj
                .get("nvars")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::DomainError("missing \"nvars\"".into()))?
                as usize;
            let degree = obj
                .get("degree")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::DomainError("missing \"degree\"".into()))?
                as u32;
            let budget = obj
                .get("support_budget")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::DomainError("missing \"support_budget\"".into()))?
                as usize;
            let coeffs = obj
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::DomainError("missing \"coeffs\"".into()))?
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => n
                        .as_i64()
                        .map(|i| hessmap_core::rational::rat_int(i))
                        .ok_or_else(|| Error::DomainError("bad coefficient".into())),
                    _ => Err(Error::DomainError("bad coefficient".into())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let hits = explore_monomial_hessian(nvars, degree, &coeffs, budget)?;
            let mut text = format!("{} hits\n", hits.len());
            for h in &hits {
                text.push_str(&format!(
                    "  {} | smooth: {} | central: {}\n",
                    h.poly, h.smooth, h.hessian_report.is_question1_shape
                ));
            }
            emit(
                &io,
                text,
                Value::Array(hits.iter().map(json::hit_to_value).collect()),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper(io) => {
            let items = verify::run_all();
            let all_pass = verify::all_pass(&items);
            emit(
                &io,
                render::report_markdown(&items),
                Value::Array(items.iter().map(json::check_item_to_value).collect()),
            )?;
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
