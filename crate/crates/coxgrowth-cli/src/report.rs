//! Shared rendering: growth analyses, censuses, and check reports, in plain
//! text or deterministic JSON. All exact values are emitted as decimal
//! strings so nothing is squeezed through floating point.

use coxgrowth::growth::{decimal_lower, decimal_upper, GrowthReport};
use coxgrowth::polyhedron::{CombinatorialPolyhedron, VertexCensus};
use coxgrowth::verify::CheckReport;
use coxgrowth::IntPolynomial;
use serde_json::{json, Value};

pub fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn coeff_line(p: &IntPolynomial) -> String {
    format!("[{}]", coeff_strings(p).join(", "))
}

/// Certified bounds rendered inward: the printed lower bound rounds up and
/// the printed upper bound truncates, so every printed digit stays inside
/// the certified enclosure.
pub fn rate_bounds(report: &GrowthReport, digits: u32) -> Option<(String, String)> {
    report
        .rate_interval
        .as_ref()
        .map(|(lo, hi)| (decimal_upper(lo, digits), decimal_lower(hi, digits)))
}

pub fn growth_text(report: &GrowthReport, digits: u32, out: &mut String) {
    let f = &report.growth_function;
    out.push_str(&format!("numerator    {}\n", coeff_line(f.num())));
    out.push_str(&format!("denominator  {}\n", coeff_line(f.den())));
    if report.is_degenerate() {
        out.push_str("degenerate: polynomial growth series (finite group)\n");
        return;
    }
    match &report.denominator_normal_form {
        Some(q) => out.push_str(&format!("normal form  {}\n", coeff_line(q))),
        None => out.push_str("normal form  (none)\n"),
    }
    out.push_str(&format!(
        "removed      (t-1)^{}, brackets {:?}\n",
        report.removed_t_minus_one, report.removed_brackets
    ));
    out.push_str(&format!("criterion    {:?}\n", report.ku_verdict));
    out.push_str(&format!("perron       {:?}\n", report.perron_verdict));
    out.push_str(&format!("pisot        {:?}\n", report.pisot_advisory));
    if let Some((lo, hi)) = rate_bounds(report, digits) {
        out.push_str(&format!("rate         [{lo}, {hi}]\n"));
    }
}

pub fn growth_json(report: &GrowthReport, digits: u32) -> Value {
    let f = &report.growth_function;
    let bounds = rate_bounds(report, digits);
    json!({
        "numerator": coeff_strings(f.num()),
        "denominator": coeff_strings(f.den()),
        "degenerate": report.is_degenerate(),
        "normal_form": report.denominator_normal_form.as_ref().map(coeff_strings),
        "removed_t_minus_one": report.removed_t_minus_one,
        "removed_brackets": report.removed_brackets,
        "criterion": format!("{:?}", report.ku_verdict),
        "perron": format!("{:?}", report.perron_verdict),
        "pisot": format!("{:?}", report.pisot_advisory),
        "rate_lower": bounds.as_ref().map(|(lo, _)| lo.clone()),
        "rate_upper": bounds.as_ref().map(|(_, hi)| hi.clone()),
    })
}

fn signature_key(sig: &[u32]) -> String {
    sig.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn census_text(p: &CombinatorialPolyhedron, census: &VertexCensus) -> String {
    let signatures: Vec<String> = census
        .signature_counts
        .iter()
        .map(|(sig, count)| format!("({}) x{count}", signature_key(sig)))
        .collect();
    let orders: Vec<String> = census
        .edge_label_counts
        .iter()
        .map(|(m, count)| format!("{m} x{count}"))
        .collect();
    format!(
        "V={} E={} F={}; vertices {}; edge orders {}",
        p.vertex_count(),
        census.edge_count,
        census.face_count,
        signatures.join(", "),
        orders.join(", ")
    )
}

pub fn census_json(p: &CombinatorialPolyhedron, census: &VertexCensus) -> Value {
    let signatures: Value = census
        .signature_counts
        .iter()
        .map(|(sig, count)| (signature_key(sig), json!(count)))
        .collect::<serde_json::Map<_, _>>()
        .into();
    let orders: Value = census
        .edge_label_counts
        .iter()
        .map(|(m, count)| (m.to_string(), json!(count)))
        .collect::<serde_json::Map<_, _>>()
        .into();
    json!({
        "vertices": p.vertex_count(),
        "edges": census.edge_count,
        "faces": census.face_count,
        "signatures": signatures,
        "edge_orders": orders,
    })
}

pub fn checks_text(reports: &[CheckReport], out: &mut String) {
    for report in reports {
        let status = if report.pass() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {}\n", report.title));
        for line in &report.lines {
            if !line.pass {
                out.push_str(&format!("  FAIL {}: {}\n", line.name, line.detail));
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.pass()).count();
    out.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        reports.len(),
        reports.len() - failed,
        failed
    ));
}

pub fn checks_json(reports: &[CheckReport]) -> Value {
    let items: Vec<Value> = reports
        .iter()
        .map(|report| {
            json!({
                "title": report.title,
                "pass": report.pass(),
                "lines": report.lines.iter().map(|line| json!({
                    "name": line.name,
                    "pass": line.pass,
                    "detail": line.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "checks": items,
        "pass": reports.iter().all(CheckReport::pass),
    })
}

pub fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization")
    );
}
