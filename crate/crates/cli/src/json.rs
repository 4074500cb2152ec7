//! JSON wire formats.
//!
//! Scalars serialize as strings ("p/q", or "p" when the denominator is one);
//! cyclotomic numbers as {"order": d, "coeffs": [...]}; polynomials as
//! {"nvars": n, "scalar": "rational" | {"cyclotomic": d}, "terms": [...]}
//! with terms in descending graded-lex order. Report objects mirror the
//! field names of their core structs.

use serde_json::{json, Map, Value};

use hessmap_core::binary::{SingularClassification, SingularVerdict};
use hessmap_core::cyclotomic::CycNumber;
use hessmap_core::differential::KernelReport;
use hessmap_core::error::Error;
use hessmap_core::families::CounterexampleRecord;
use hessmap_core::groups::GroupSpec;
use hessmap_core::hessian::MonomialHessianReport;
use hessmap_core::jacobian::{MonomialIdeal, SmoothnessReport};
use hessmap_core::monomial::Monomial;
use hessmap_core::pipeline::{ExplorationHit, KayalResult, KayalStage, KayalStatus};
use hessmap_core::poly::MultiPoly;
use hessmap_core::rational::{parse_rational, Rational};
use hessmap_core::scalar::{Scalar, ScalarKind};
use hessmap_core::verify::CheckItem;

pub fn rational_to_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(r) => rational_to_value(r),
        Scalar::Cyc(c) => cyc_to_value(c),
    }
}

pub fn cyc_to_value(c: &CycNumber) -> Value {
    json!({
        "order": c.order(),
        "coeffs": c.coeffs().iter().map(rational_to_value).collect::<Vec<_>>(),
    })
}

pub fn poly_to_value(p: &MultiPoly) -> Value {
    let scalar = match p.kind() {
        ScalarKind::Rational => Value::String("rational".into()),
        ScalarKind::Cyclotomic(d) => json!({ "cyclotomic": d }),
    };
    let terms: Vec<Value> = p
        .terms_desc()
        .map(|(m, c)| {
            json!({
                "exp": m.0.clone(),
                "coeff": scalar_to_value(c),
            })
        })
        .collect();
    json!({
        "nvars": p.nvars(),
        "scalar": scalar,
        "terms": terms,
    })
}

fn bad(msg: &str) -> Error {
    Error::ParseError {
        position: 0,
        message: msg.into(),
    }
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| bad(&format!("{what}: expected a JSON object")))
}

fn get_u64(obj: &Map<String, Value>, key: &str) -> Result<u64, Error> {
    obj.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| bad(&format!("missing or invalid \"{key}\"")))
}

pub fn rational_from_value(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| bad("numeric coefficients must be integers"))?;
            Ok(Rational::from_integer(i.into()))
        }
        _ => Err(bad("expected a rational string")),
    }
}

pub fn scalar_from_value(v: &Value) -> Result<Scalar, Error> {
    if let Ok(obj) = as_object(v, "scalar") {
        let order = get_u64(obj, "order")? as u32;
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"coeffs\""))?
            .iter()
            .map(rational_from_value)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Scalar::Cyc(CycNumber::from_coeffs(order, coeffs)?))
    } else {
        Ok(Scalar::Rat(rational_from_value(v)?))
    }
}

pub fn poly_from_value(v: &Value) -> Result<MultiPoly, Error> {
    let obj = as_object(v, "polynomial")?;
    let nvars = get_u64(obj, "nvars")? as usize;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\""))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let tobj = as_object(t, "term")?;
        let exps: Vec<u32> = tobj
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"exp\""))?
            .iter()
            .map(|e| e.as_u64().map(|v| v as u32).ok_or_else(|| bad("bad exponent")))
            .collect::<Result<_, _>>()?;
        let coeff = scalar_from_value(
            tobj.get("coeff").ok_or_else(|| bad("missing \"coeff\""))?,
        )?;
        parsed.push((Monomial(exps), coeff));
    }
    let p = MultiPoly::from_terms(nvars, parsed)?;
    // honor an explicit cyclotomic tag even when all terms are rational
    if let Some(scalar) = obj.get("scalar") {
        if let Some(sobj) = scalar.as_object() {
            let d = get_u64(sobj, "cyclotomic")? as u32;
            return p.promote(ScalarKind::Cyclotomic(d));
        }
    }
    Ok(p)
}

pub fn monomial_report_to_value(r: &MonomialHessianReport) -> Value {
    json!({
        "is_monomial": r.is_monomial,
        "alpha": r.alpha.as_ref().map(scalar_to_value).unwrap_or(Value::Null),
        "exponents": r
            .exponents
            .as_ref()
            .map(|m| json!(m.0.clone()))
            .unwrap_or(Value::Null),
        "is_question1_shape": r.is_question1_shape,
        "zero_hessian": r.zero_hessian,
    })
}

pub fn kernel_report_to_value(r: &KernelReport) -> Value {
    json!({
        "dim": r.dim,
        "basis": r.basis.iter().map(poly_to_value).collect::<Vec<_>>(),
    })
}

pub fn classification_to_value(c: &SingularClassification) -> Value {
    json!({
        "d": c.d,
        "verdict": match c.verdict {
            SingularVerdict::NoSingularSolutions => "NoSingularSolutions",
            SingularVerdict::CentralMonomialFamily => "CentralMonomialFamily",
        },
        "family": c.family_description.clone().map(Value::String).unwrap_or(Value::Null),
    })
}

pub fn counterexample_record_to_value(r: &CounterexampleRecord) -> Value {
    json!({
        "spec": {
            "n": r.spec.n,
            "d": r.spec.d,
            "q": r.spec.q,
            "k": r.spec.k(),
        },
        "alpha": rational_to_value(&r.alpha),
        "hessian_shape_ok": r.hessian_shape_ok,
        "singular": r.singular,
        "pass": r.pass,
    })
}

pub fn smoothness_to_value(r: &SmoothnessReport) -> Value {
    json!({
        "is_smooth": r.is_smooth,
        "witness_degree": r.witness_degree,
        "rank": r.rank,
        "full_rank_needed": r.full_rank_needed,
    })
}

pub fn ideal_to_value(i: &MonomialIdeal) -> Value {
    json!({
        "nvars": i.nvars(),
        "gens": i.generators().iter().map(|m| json!(m.0.clone())).collect::<Vec<_>>(),
    })
}

pub fn group_spec_from_value(v: &Value) -> Result<GroupSpec, Error> {
    let obj = as_object(v, "group spec")?;
    GroupSpec::new(
        get_u64(obj, "d")? as u32,
        get_u64(obj, "e")? as u32,
        get_u64(obj, "n")? as usize,
    )
}

pub fn kayal_result_to_value(r: &KayalResult) -> Value {
    json!({
        "status": match r.status {
            KayalStatus::Equivalent => "Equivalent",
            KayalStatus::Rejected => "Rejected",
            KayalStatus::Inconclusive => "Inconclusive",
        },
        "stage": match r.stage {
            KayalStage::HessianZero => "HessianZero",
            KayalStage::FactorizationFailed => "FactorizationFailed",
            KayalStage::FactorizationIncomplete => "FactorizationIncomplete",
            KayalStage::LinearSolveFailed => "LinearSolveFailed",
            KayalStage::Success => "Success",
        },
        "forms": r
            .forms
            .iter()
            .map(|(alpha, h)| json!({
                "alpha": rational_to_value(alpha),
                "form": poly_to_value(h),
            }))
            .collect::<Vec<_>>(),
        "note": r.note,
    })
}

pub fn hit_to_value(h: &ExplorationHit) -> Value {
    json!({
        "poly": poly_to_value(&h.poly),
        "hessian_report": monomial_report_to_value(&h.hessian_report),
        "smooth": h.smooth,
    })
}

pub fn check_item_to_value(i: &CheckItem) -> Value {
    json!({
        "id": i.id,
        "paper_ref": i.paper_ref,
        "expected": i.expected,
        "computed": i.computed,
        "pass": i.pass,
    })
}

/// Parses a polynomial from either the JSON schema or the text grammar.
pub fn poly_from_input(input: &str, nvars: Option<usize>) -> Result<MultiPoly, Error> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let v: Value =
            serde_json::from_str(trimmed).map_err(|e| bad(&format!("invalid JSON: {e}")))?;
        let p = poly_from_value(&v)?;
        if let Some(n) = nvars {
            if p.nvars() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: p.nvars(),
                });
            }
        }
        Ok(p)
    } else {
        hessmap_core::text::parse_poly_with_nvars(trimmed, nvars)
    }
}
