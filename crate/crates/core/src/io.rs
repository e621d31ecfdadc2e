//! The `.ng` text format, Graphviz DOT export and the JSON result envelope.
//!
//! A graph file is UTF-8 text, one declaration per line:
//!
//! ```text
//! # comment
//! vertex a real
//! vertex b indet
//! edge a b indet
//! ```
//!
//! Vertices must be declared before any edge that uses them. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Kind, NeutroGraph};
use crate::matrix::Matrix;
use crate::number::{Coefficient, NeutroNum};
use crate::subgraph::HasseDiagram;
use crate::subset::SubsetVertexGraph;

pub const FORMAT_VERSION: &str = concat!("neutrograph/", env!("CARGO_PKG_VERSION"));

pub fn parse(text: &str) -> Result<NeutroGraph> {
    let mut g = NeutroGraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let kind_of = |tok: &str| tok.parse::<Kind>().map_err(|_| err(format!("bad kind token `{tok}`")));
        match fields.as_slice() {
            ["vertex", id, kind] => {
                let kind = kind_of(kind)?;
                g.add_vertex(*id, kind).map_err(|e| err(describe(&e)))?;
            }
            ["edge", a, b, kind] => {
                let kind = kind_of(kind)?;
                g.add_edge(a, b, kind).map_err(|e| err(describe(&e)))?;
            }
            ["vertex", ..] => return Err(err("expected `vertex <id> <real|indet>`".into())),
            ["edge", ..] => return Err(err("expected `edge <id> <id> <real|indet>`".into())),
            [other, ..] => return Err(err(format!("unknown keyword `{other}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(g)
}

fn describe(e: &Error) -> String {
    match e {
        Error::DuplicateVertex(id) => format!("duplicate declaration of vertex `{id}`"),
        Error::DuplicateEdge(a, b) => format!("duplicate declaration of edge `{a}` -- `{b}`"),
        Error::UndeclaredEndpoint(id) => format!("undeclared endpoint `{id}`"),
        Error::SelfLoop(id) => format!("self-loop on `{id}`"),
        other => other.to_string(),
    }
}

/// Vertices then edges, each in declaration order.
pub fn render(g: &NeutroGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {} {}", v.id, v.kind).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", g.id(e.a), g.id(e.b), e.kind).unwrap();
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT; indeterminate vertices and edges are drawn dashed.
pub fn graph_to_dot(g: &NeutroGraph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        match v.kind {
            Kind::Real => writeln!(out, "  {};", quote(&v.id)).unwrap(),
            Kind::Indeterminate => writeln!(out, "  {} [style=dashed];", quote(&v.id)).unwrap(),
        }
    }
    for e in g.edges() {
        let (a, b) = (quote(g.id(e.a)), quote(g.id(e.b)));
        match e.kind {
            Kind::Real => writeln!(out, "  {a} -- {b};").unwrap(),
            Kind::Indeterminate => writeln!(out, "  {a} -- {b} [style=dashed];").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

/// Subset vertices are labelled as brace-sets; the root, if any, is doubled.
pub fn subset_to_dot(g: &SubsetVertexGraph) -> String {
    let mut out = String::from("graph G {\n  node [shape=ellipse];\n");
    for i in 0..g.vertex_count() {
        if g.root() == Some(i) {
            writeln!(out, "  {} [peripheries=2];", quote(&g.label(i))).unwrap();
        } else {
            writeln!(out, "  {};", quote(&g.label(i))).unwrap();
        }
    }
    for &(a, b) in g.edges() {
        writeln!(out, "  {} -- {};", quote(&g.label(a)), quote(&g.label(b))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One node per member, an edge from each member to every member covering
/// it, and members of equal size on the same rank.
pub fn hasse_to_dot(h: &HasseDiagram) -> String {
    let mut out = String::from("digraph S {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, label) in h.labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
    }
    let max_rank = h.ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=max_rank {
        let same: Vec<String> = (0..h.ranks.len()).filter(|&i| h.ranks[i] == r).map(|i| format!("n{i}")).collect();
        if !same.is_empty() {
            writeln!(out, "  {{ rank=same; {}; }}", same.join("; ")).unwrap();
        }
    }
    for &(lo, hi) in &h.covers {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn number_json<T: Coefficient>(x: &NeutroNum<T>) -> Value {
    json!({ "real": x.real().to_string(), "indet": x.indet().to_string() })
}

/// `{rows, cols, row_labels, col_labels, entries}` with entries as nested
/// arrays of `{real, indet}` decimal strings.
pub fn matrix_json<T: Coefficient>(m: &Matrix<NeutroNum<T>>) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(number_json).collect())).collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "row_labels": m.row_labels(),
        "col_labels": m.col_labels(),
        "entries": entries,
    })
}

/// Reads back a matrix written by [`matrix_json`].
pub fn matrix_from_json<T: Coefficient>(v: &Value) -> Result<Matrix<NeutroNum<T>>> {
    let bad = |why: &str| Error::InvalidMatrix(format!("json: {why}"));
    let labels = |key: &str| -> Result<Vec<String>> {
        v[key]
            .as_array()
            .ok_or_else(|| bad(key))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| bad(key)))
            .collect()
    };
    let coef = |x: &Value| -> Result<T> { x.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| bad("coefficient")) };
    let rows = v["entries"]
        .as_array()
        .ok_or_else(|| bad("entries"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("row"))?
                .iter()
                .map(|x| Ok(NeutroNum::new(coef(&x["real"])?, coef(&x["indet"])?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(rows)?;
    let (rl, cl) = (labels("row_labels")?, labels("col_labels")?);
    if rl.len() != m.rows() || cl.len() != m.cols() {
        return Err(bad("label count"));
    }
    Ok(m.with_labels(rl, cl))
}

pub fn envelope(command: &str, result: Value) -> Value {
    json!({ "version": FORMAT_VERSION, "command": command, "result": result })
}
