//! JSON, text and CSV renderings of an [`AnalysisReport`].

use serde::Serialize;
use serde_json::{Map, Value};

use crate::analysis::AnalysisReport;

pub fn to_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// `key: value` lines in JSON field order; nested values are compact JSON.
pub fn to_text(report: &AnalysisReport) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = String::new();
    if let Value::Object(map) = value {
        write_fields(&mut out, "", &map);
    }
    out
}

fn write_fields(out: &mut String, prefix: &str, map: &Map<String, Value>) {
    for (key, v) in map {
        match v {
            Value::Object(inner) => write_fields(out, &format!("{prefix}{key}."), inner),
            Value::String(s) => out.push_str(&format!("{prefix}{key}: {s}\n")),
            other => out.push_str(&format!("{prefix}{key}: {other}\n")),
        }
    }
}

#[derive(Serialize)]
struct Row<'a> {
    group: &'a str,
    order: usize,
    k: u64,
    k_normalized: u64,
    edges: usize,
    edge_count_formula: u64,
    max_degree: usize,
    components: usize,
    component_shapes: String,
    is_connected: bool,
    diameter: Option<usize>,
    diameter_bound: Option<u64>,
    clique_number: u8,
    clique_criterion_holds: bool,
    chromatic_number: u8,
    is_forest: bool,
    forest_criterion_holds: bool,
    is_star: bool,
    star_criterion_case: String,
    is_empty: bool,
    is_perfect: bool,
    discrepancies: usize,
}

/// Header plus one row; list-valued fields are summarized.
pub fn to_csv(report: &AnalysisReport) -> String {
    let shapes: Vec<String> = report
        .component_shapes
        .iter()
        .map(|s| {
            let v = serde_json::to_value(s).expect("shape serializes");
            let name = v["shape"].as_str().unwrap_or_default().to_string();
            let len = v
                .get("length")
                .or_else(|| v.get("cycle_length"))
                .map(|l| format!("/{l}"))
                .unwrap_or_default();
            format!("{name}{len}[{}]x{}", s.vertices, s.count)
        })
        .collect();
    let case = serde_json::to_value(report.star_criterion_case).expect("case serializes");
    let row = Row {
        group: &report.group,
        order: report.order,
        k: report.k,
        k_normalized: report.k_normalized,
        edges: report.edges,
        edge_count_formula: report.edge_count_formula,
        max_degree: report.degree_sequence.iter().copied().max().unwrap_or(0),
        components: report.components,
        component_shapes: shapes.join(";"),
        is_connected: report.is_connected,
        diameter: report.diameter,
        diameter_bound: report.diameter_bound,
        clique_number: report.clique_number,
        clique_criterion_holds: report.clique_criterion_holds,
        chromatic_number: report.chromatic_number,
        is_forest: report.is_forest,
        forest_criterion_holds: report.forest_criterion_holds,
        is_star: report.is_star,
        star_criterion_case: case.as_str().unwrap_or_default().to_string(),
        is_empty: report.is_empty,
        is_perfect: report.is_perfect,
        discrepancies: report.discrepancies.len(),
    };
    let mut w = csv::Writer::from_writer(vec![]);
    w.serialize(row).expect("row serializes");
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}
