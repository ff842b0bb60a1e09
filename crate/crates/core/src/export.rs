//! Byte-stable DOT and JSON renderings of a k-power graph.

use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::KPowerGraph;
use crate::groups::FiniteGroup;

#[derive(Debug, Serialize)]
struct GraphDocument<'a> {
    group: String,
    k: u64,
    edges: &'a [[usize; 2]],
    fixed_points: &'a [usize],
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected `graph` block with one labeled node per element.
pub fn to_dot(g: &FiniteGroup, gr: &KPowerGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"P({}, {})\" {{", g.spec(), gr.k_raw());
    for x in g.elements() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", x, escape(&g.element_name(x)));
    }
    for (u, v) in gr.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// `{"group", "k", "edges", "fixed_points"}` with sorted `u < v` edges.
pub fn to_json(g: &FiniteGroup, gr: &KPowerGraph) -> String {
    let edges: Vec<[usize; 2]> = gr.edges().into_iter().map(|(u, v)| [u, v]).collect();
    let doc = GraphDocument {
        group: g.spec().to_string(),
        k: gr.k_raw(),
        edges: &edges,
        fixed_points: gr.fixed_points(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph document serializes");
    s.push('\n');
    s
}
