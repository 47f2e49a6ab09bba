use ellbern::algebra::to_latex_factored;
use ellbern::verify::{OutputFormat, SuiteResult};
use ellbern::{MultiPoly, Rational, Var};
use serde_json::{json, Map, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// `{"variables": [...], "terms": [{"coefficient": "p/q", "exponents": {...}}]}`,
/// terms in descending canonical order.
pub fn poly_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let exps: Map<String, Value> = m.factors().map(|(v, e)| (v.name().to_string(), json!(e))).collect();
            json!({ "coefficient": rational(c), "exponents": exps })
        })
        .collect();
    let vars: Vec<&str> = p.variables().into_iter().map(Var::name).collect();
    json!({ "variables": vars, "terms": terms, "text": p.to_string() })
}

pub fn poly(p: &MultiPoly, format: OutputFormat) -> anyhow::Result<String> {
    Ok(match format {
        OutputFormat::Text => p.to_string(),
        OutputFormat::Latex => to_latex_factored(p, Var::S),
        OutputFormat::Json => serde_json::to_string_pretty(&poly_json(p))?,
        OutputFormat::Csv => anyhow::bail!("csv output is only available for figure-data"),
    })
}

pub fn suites_json(seed: u64, results: &[SuiteResult]) -> Value {
    let suites: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "passed": r.passed(),
                "checks": r.checks,
                "failures": r.failures,
                "first_failure": r.first_failure,
                "notes": r.notes,
            })
        })
        .collect();
    json!({
        "seed": seed,
        "passed": results.iter().all(SuiteResult::passed),
        "suites": suites,
    })
}
