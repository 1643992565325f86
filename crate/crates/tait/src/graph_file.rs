//! Line-oriented graph files.
//!
//! ```text
//! # theta
//! vertex 0: 0 1 2
//! vertex 1: 3 5 4
//! edge 0: 0 3
//! edge 1: 1 4
//! edge 2: 2 5
//! ```
//!
//! Rotations are counterclockwise. Leg lines read `leg in <pos>: <h>` and
//! `leg out <pos>: <h>`; the leg half-edge is attached to no vertex and is
//! paired with another half-edge by an edge line.

use std::collections::BTreeMap;
use std::fmt::Write;

use tait_core::{EmbeddedGraph, GraphError, HalfEdgeId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ParseError: line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Default)]
struct Sections {
    vertices: BTreeMap<usize, Vec<HalfEdgeId>>,
    edges: BTreeMap<usize, [HalfEdgeId; 2]>,
    legs_in: BTreeMap<usize, HalfEdgeId>,
    legs_out: BTreeMap<usize, HalfEdgeId>,
    // half-edge -> line of its vertex/leg mention, and of its edge mention
    attached: BTreeMap<HalfEdgeId, usize>,
    paired: BTreeMap<HalfEdgeId, usize>,
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError { line, msg: format!("expected {what}, found `{tok}`") })
}

fn dense<T: Clone>(m: &BTreeMap<usize, T>, what: &str) -> Result<Vec<T>, GraphError> {
    for (i, k) in m.keys().enumerate() {
        if *k != i {
            return Err(GraphError::Malformed(format!("{what} ids are not dense: {i} missing")));
        }
    }
    Ok(m.values().cloned().collect())
}

pub fn parse_graph(text: &str) -> Result<EmbeddedGraph, GraphFileError> {
    let mut s = Sections::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| ParseError { line, msg };
        let (head, tail) = body.split_once(':').ok_or_else(|| err("missing `:`".into()))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let ids = tail.split_whitespace().map(|t| number(t, line, "a half-edge id")).collect::<Result<Vec<_>, _>>()?;
        match head.as_slice() {
            ["vertex", v] => {
                let v = number(v, line, "a vertex id")?;
                for &h in &ids {
                    if let Some(prev) = s.attached.insert(h, line) {
                        return Err(err(format!("half-edge {h} already used on line {prev}")).into());
                    }
                }
                if s.vertices.insert(v, ids).is_some() {
                    return Err(err(format!("vertex {v} defined twice")).into());
                }
            }
            ["edge", e] => {
                let e = number(e, line, "an edge id")?;
                let &[x, y] = ids.as_slice() else {
                    return Err(err(format!("edge {e} needs exactly 2 half-edges")).into());
                };
                for h in [x, y] {
                    if let Some(prev) = s.paired.insert(h, line) {
                        return Err(err(format!("half-edge {h} already paired on line {prev}")).into());
                    }
                }
                if s.edges.insert(e, [x, y]).is_some() {
                    return Err(err(format!("edge {e} defined twice")).into());
                }
            }
            ["leg", side @ ("in" | "out"), p] => {
                let p = number(p, line, "a leg position")?;
                let &[h] = ids.as_slice() else {
                    return Err(err("a leg has exactly 1 half-edge".into()).into());
                };
                if let Some(prev) = s.attached.insert(h, line) {
                    return Err(err(format!("half-edge {h} already used on line {prev}")).into());
                }
                let legs = if *side == "in" { &mut s.legs_in } else { &mut s.legs_out };
                if legs.insert(p, h).is_some() {
                    return Err(err(format!("leg {side} {p} defined twice")).into());
                }
            }
            _ => return Err(err(format!("unknown record `{}`", head.join(" "))).into()),
        }
    }
    let g = EmbeddedGraph::new(
        dense(&s.vertices, "vertex")?,
        dense(&s.edges, "edge")?,
        dense(&s.legs_in, "leg in")?,
        dense(&s.legs_out, "leg out")?,
    )?;
    Ok(g)
}

pub fn serialize_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for (v, r) in g.rotations().iter().enumerate() {
        writeln!(out, "vertex {v}: {} {} {}", r[0], r[1], r[2]).unwrap();
    }
    for (e, [x, y]) in g.edges().iter().enumerate() {
        writeln!(out, "edge {e}: {x} {y}").unwrap();
    }
    for (p, h) in g.legs_in().iter().enumerate() {
        writeln!(out, "leg in {p}: {h}").unwrap();
    }
    for (p, h) in g.legs_out().iter().enumerate() {
        writeln!(out, "leg out {p}: {h}").unwrap();
    }
    out
}
