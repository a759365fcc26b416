//! Graphviz output for AR quivers.

use std::fmt::Write;

use crate::algebra::GentlePresentation;
use crate::artheory::ArQuiver;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes are named by canonical string text; tau pairs are dashed and
/// undirected.
pub fn ar_quiver_dot(p: &GentlePresentation, ar: &ArQuiver) -> String {
    let q = p.quiver();
    let names: Vec<String> = ar.nodes.iter().map(|w| quoted(&w.text(q))).collect();
    let mut out = String::from("digraph ar {\n    rankdir=LR;\n");
    for (w, name) in ar.nodes.iter().zip(&names) {
        writeln!(out, "    {name} [label={}];", quoted(&w.label(q))).unwrap();
    }
    for &(a, b) in &ar.edges {
        writeln!(out, "    {} -> {};", names[a], names[b]).unwrap();
    }
    for &(a, b) in &ar.tau_pairs {
        writeln!(
            out,
            "    {} -> {} [style=dashed, dir=none];",
            names[a], names[b]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
