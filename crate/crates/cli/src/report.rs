//! JSON payloads: stable key order (serde_json maps are sorted),
//! polynomials as canonical strings, scalars factored out positive.

use mucurve_core::adjoint::{CurveModel, SingularityReport};
use mucurve_core::inertia::GeneratorSet;
use mucurve_core::verify::Check;
use mucurve_core::{MultiPoly, Scalar};
use serde_json::{json, Value};

pub fn poly(p: &MultiPoly) -> Value {
    Value::String(p.to_string())
}

pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn point(coords: &[Scalar]) -> Value {
    Value::String(format!("({} : {} : {})", coords[0], coords[1], coords[2]))
}

pub fn envelope(command: &str, input_hash: &str, result: Value, timing_ms: u128) -> Value {
    json!({
        "tool": "mucurve",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input_hash": input_hash,
        "result": result,
        "timing_ms": timing_ms,
    })
}

pub fn mubasis(cm: &CurveModel) -> Value {
    let mb = cm.mu_basis();
    json!({
        "d": mb.parametrization_degree(),
        "mu": mb.mu(),
        "p": poly(mb.p().poly()),
        "q": poly(mb.q().poly()),
        "deg_phi": cm.deg_phi(),
    })
}

pub fn implicitize(cm: &CurveModel) -> Value {
    json!({
        "implicit": poly(cm.implicit()),
        "alpha": scalar(cm.alpha()),
        "deg_phi": cm.deg_phi(),
        "curve_degree": cm.curve_degree(),
    })
}

pub fn generators(set: &GeneratorSet) -> Value {
    let gens: Vec<Value> = set
        .generators
        .iter()
        .map(|g| {
            json!({
                "provenance": g.provenance.label(),
                "form": poly(g.form.poly()),
                "xdeg": g.form.xdeg(),
                "tdeg": g.form.tdeg(),
            })
        })
        .collect();
    json!({
        "mu": set.mu,
        "complete": set.completeness.is_complete(),
        "condition": set.completeness.condition(),
        "generators": gens,
    })
}

pub fn subres(values: &[MultiPoly]) -> Value {
    let list: Vec<Value> = values.iter().map(poly).collect();
    json!({ "subresultants": list })
}

pub fn adjoints(candidates: &[MultiPoly], pencils: &[mucurve_core::BiForm]) -> Value {
    json!({
        "candidates": candidates.iter().map(poly).collect::<Vec<_>>(),
        "pencils": pencils.iter().map(|p| poly(p.poly())).collect::<Vec<_>>(),
    })
}

pub fn dres(report: &SingularityReport) -> Value {
    json!({
        "dres": poly(&report.dres),
        "degree": report.total_degree,
        "expected_degree": report.expected_degree,
        "gamma": scalar(&report.gamma),
        "squarefree": report
            .squarefree
            .iter()
            .map(|(f, e)| json!({ "factor": poly(f), "exponent": e }))
            .collect::<Vec<_>>(),
    })
}

pub fn singular(
    report: &SingularityReport,
    reparametrization: Option<[[i64; 2]; 2]>,
) -> Value {
    let clusters: Vec<Value> = report
        .clusters
        .iter()
        .map(|c| {
            json!({
                "factor": poly(&c.factor),
                "parameters": c.parameters.iter().map(scalar).collect::<Vec<_>>(),
                "epsilon": c.epsilon,
                "point": c.point.as_ref().map(|p| point(p)).unwrap_or(Value::Null),
                "multiplicity": c.multiplicity,
            })
        })
        .collect();
    json!({
        "dres": poly(&report.dres),
        "degree": report.total_degree,
        "expected_degree": report.expected_degree,
        "clusters": clusters,
        "genus_lhs": report.genus_lhs,
        "accounted_twice": report.accounted_twice,
        "balanced": report.balanced,
        "reparametrization": reparametrization
            .map(|m| json!([[m[0][0], m[0][1]], [m[1][0], m[1][1]]]))
            .unwrap_or(Value::Null),
    })
}

pub fn verify(checks: &[Check]) -> Value {
    json!({
        "all_pass": checks.iter().all(|c| c.pass),
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
            .collect::<Vec<_>>(),
    })
}
