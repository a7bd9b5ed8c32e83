//! Text and JSON renderings of results.

use atiyah_kring::classify::{
    ClassificationReport, GridRow, IntegerPolynomial, ReportInput, SSetDescription,
};
use atiyah_kring::oracle::OracleCheck;
use atiyah_kring::{BundleSum, IndecomposableBundle, TorsionContext};
use serde_json::{json, Value};

pub fn bundle_json(bundle: &BundleSum) -> Value {
    let terms: Vec<Value> = bundle
        .iter()
        .map(|(b, m)| {
            json!({
                "bundle": b.to_string(),
                "exponent": b.exponent(),
                "index": b.index(),
                "multiplicity": m.to_string(),
            })
        })
        .collect();
    json!({
        "torsion": bundle.context().order(),
        "result": bundle.to_string(),
        "terms": terms,
        "rank": bundle.rank().to_string(),
        "det_exponent": bundle.det_exponent().to_string(),
    })
}

fn s_set_json(s: &SSetDescription) -> Value {
    let (finite, families) = s.describe();
    json!({ "finite": finite, "families": families })
}

pub fn report_json(report: &ClassificationReport) -> Value {
    let input = match &report.input {
        ReportInput::Elliptic { rank, torsion } => json!({ "rank": rank, "torsion": torsion }),
        ReportInput::ProjectiveLine { degrees, gcd } => json!({ "degrees": degrees, "gcd": gcd }),
    };
    let factors: Vec<String> = report.group.factors.iter().map(|f| f.to_string()).collect();
    json!({
        "input": input,
        "s_set": s_set_json(&report.s_set),
        "presentation": {
            "kind": report.presentation.kind.name(),
            "modulus": report.presentation.kind.modulus(),
            "generators": report.presentation.generators,
            "ring": report.presentation.to_string(),
        },
        "krull_dim": report.krull_dim,
        "group": {
            "factors": factors,
            "dim": report.group.dimension(),
            "name": report.group.to_string(),
        },
        "correspondence": report.correspondence_holds,
        "minimality_note": report.minimality_note,
        "extension": report.extension,
    })
}

fn describe_input(input: &ReportInput) -> String {
    match input {
        ReportInput::Elliptic { rank, torsion } => {
            let ctx = TorsionContext::new(*torsion);
            let e = IndecomposableBundle::new(ctx, 1, *rank)
                .map(|b| b.to_string())
                .unwrap_or_default();
            let order = match torsion {
                0 => "L of infinite order".to_string(),
                1 => "L trivial".to_string(),
                n => format!("L of order {n}"),
            };
            format!("E = {e} on an elliptic curve, {order}")
        }
        ReportInput::ProjectiveLine { degrees, gcd } => {
            let parts: Vec<String> = degrees.iter().map(|d| format!("O({d})")).collect();
            format!("E = {} on P^1, gcd {gcd}", parts.join(" + "))
        }
    }
}

pub fn report_text(report: &ClassificationReport) -> String {
    let p = &report.presentation;
    let mut ring = p.to_string();
    let labels = ["x", "y"];
    let named: Vec<String> = p
        .generators
        .iter()
        .zip(labels)
        .map(|(g, l)| format!("{l} = {g}"))
        .collect();
    if !named.is_empty() {
        ring = format!("{ring}, {}", named.join(", "));
    }
    let mut out = vec![
        describe_input(&report.input),
        format!("S(E)      = {}", report.s_set),
        format!("R(E)      = {ring}"),
        format!("Krull dim = {}", report.krull_dim),
        format!(
            "group     = {} (dim {})",
            report.group,
            report.group.dimension()
        ),
        format!(
            "dim R(E) = dim G: {}",
            if report.correspondence_holds {
                "holds"
            } else {
                "FAILS"
            }
        ),
    ];
    if let Some(note) = &report.minimality_note {
        out.push(format!("note: {note}"));
    }
    if report.extension {
        out.push("note: non-torsion line bundle, classified by analogy with P^1".into());
    }
    out.join("\n")
}

pub fn sset_json(
    rank: u32,
    torsion: u64,
    bound: u64,
    symbolic: &SSetDescription,
    enumerated: &[IndecomposableBundle],
) -> Value {
    let listed: Vec<String> = enumerated.iter().map(|b| b.to_string()).collect();
    json!({
        "input": { "rank": rank, "torsion": torsion },
        "bound": bound,
        "symbolic": s_set_json(symbolic),
        "enumerated": listed,
    })
}

pub fn sset_text(
    bound: u64,
    symbolic: &SSetDescription,
    enumerated: &[IndecomposableBundle],
) -> String {
    let listed: Vec<String> = enumerated.iter().map(|b| b.to_string()).collect();
    format!(
        "S(E) = {symbolic}\npowers |m| <= {bound}: {{ {} }}",
        listed.join(", ")
    )
}

pub fn express_json(index: u32, generator: u32, poly: &IntegerPolynomial) -> Value {
    let coefficients: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
    json!({
        "index": index,
        "generator": format!("[F_{generator}]"),
        "polynomial": poly.to_string(),
        "coefficients": coefficients,
    })
}

pub fn verify_json(pairs: usize, failures: &[OracleCheck]) -> Value {
    let mismatches: Vec<Value> = failures
        .iter()
        .map(|c| json!({ "rule": c.rule.to_string(), "oracle": c.oracle.to_string() }))
        .collect();
    json!({
        "pairs": pairs,
        "agree": pairs - failures.len(),
        "mismatches": mismatches,
    })
}

pub fn verify_text(pairs: usize, failures: &[OracleCheck]) -> String {
    let mut out = vec![format!(
        "oracle agreement {}/{pairs} pairs",
        pairs - failures.len()
    )];
    for c in failures {
        out.push(format!("mismatch: rule {} vs oracle {}", c.rule, c.oracle));
    }
    out.join("\n")
}

pub fn grid_json(rows: &[GridRow]) -> Value {
    let rendered: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "rank": r.rank,
                "torsion": r.torsion,
                "krull_dim": r.krull_dim,
                "group_dim": r.group_dim,
                "holds": r.holds,
            })
        })
        .collect();
    json!({
        "rows": rendered,
        "all_hold": rows.iter().all(|r| r.holds),
    })
}

pub fn grid_text(rows: &[GridRow]) -> String {
    let mut out = vec![format!(
        "{:>3} {:>3} {:>5} {:>5} {:>5}",
        "r", "n", "dimR", "dimG", "holds"
    )];
    for r in rows {
        out.push(format!(
            "{:>3} {:>3} {:>5} {:>5} {:>5}",
            r.rank, r.torsion, r.krull_dim, r.group_dim, r.holds
        ));
    }
    let good = rows.iter().filter(|r| r.holds).count();
    out.push(format!(
        "correspondence holds in {good}/{} cells",
        rows.len()
    ));
    out.join("\n")
}
