//! Brute-force ground truth: explicit enumeration of proper 3-edge
//! colorings, boundary-conditioned counts, face 4-colorings and
//! cross-section products.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::graph::{EdgeId, EmbeddedGraph, GraphError};
use crate::k4::{k4_word_product, Color, K4Element};
use crate::slicer::{recompose_traced, MorphismWord};
use crate::tft::CountMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("InconsistentHolonomy: face {face} across edge {edge}")]
    InconsistentHolonomy { face: usize, edge: EdgeId },
    #[error("NotAdmissible: {0}")]
    NotAdmissible(String),
    #[error("WidthMismatch: {0}")]
    WidthMismatch(String),
    #[error("TooManyEdges: raw scan supports at most {max} edges, got {got}")]
    TooManyEdges { max: usize, got: usize },
}

/// One color per edge, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorAssignment(Vec<Color>);

impl ColorAssignment {
    pub fn new(colors: Vec<Color>) -> Self {
        ColorAssignment(colors)
    }

    pub fn get(&self, e: EdgeId) -> Color {
        self.0[e]
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    /// Proper at every vertex: the three incident edges differ.
    pub fn is_admissible(&self, g: &EmbeddedGraph) -> bool {
        self.0.len() == g.num_edges()
            && g.rotations().iter().all(|r| {
                let [x, y, z] = r.map(|h| self.0[g.edge_of(h)]);
                x != y && y != z && x != z
            })
    }
}

impl fmt::Display for ColorAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.0.iter().enumerate() {
            if e > 0 {
                f.write_str(" ")?;
            }
            write!(f, "edge{e}={c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Return no colorings at once when some vertex carries a loop.
    pub loop_short_circuit: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { loop_short_circuit: true }
    }
}

/// Edges in breadth-first order from edge 0, so that each new edge tends
/// to close constraints at an already touched vertex.
fn search_order(g: &EmbeddedGraph) -> Vec<EdgeId> {
    let mut seen = vec![false; g.num_edges()];
    let mut order = Vec::with_capacity(g.num_edges());
    for root in 0..g.num_edges() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            for h in g.edge(e) {
                if let Some(v) = g.vertex_of(h) {
                    for k in g.rotation(v) {
                        let f = g.edge_of(k);
                        if !seen[f] {
                            seen[f] = true;
                            queue.push_back(f);
                        }
                    }
                }
            }
        }
    }
    order
}

struct Search<'g> {
    g: &'g EmbeddedGraph,
    order: Vec<EdgeId>,
    colors: Vec<Option<Color>>,
}

impl Search<'_> {
    /// Color `c` on edge `e` clashes with no colored edge at either end. A
    /// loop clashes with itself.
    fn fits(&self, e: EdgeId, c: Color) -> bool {
        self.g.edge(e).iter().all(|&h| match self.g.vertex_of(h) {
            None => true,
            Some(v) => self.g.rotation(v).iter().filter(|&&k| k != h).all(|&k| {
                let f = self.g.edge_of(k);
                f != e && self.colors[f] != Some(c)
            }),
        })
    }

    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[Option<Color>])) {
        if depth == self.order.len() {
            visit(&self.colors);
            return;
        }
        let e = self.order[depth];
        for c in Color::ALL {
            if self.fits(e, c) {
                self.colors[e] = Some(c);
                self.run(depth + 1, visit);
                self.colors[e] = None;
            }
        }
    }
}

fn search(g: &EmbeddedGraph, opts: OracleOptions, first: Option<Color>, visit: &mut dyn FnMut(&[Option<Color>])) {
    if opts.loop_short_circuit && g.has_loop() {
        return;
    }
    let order = search_order(g);
    let mut s = Search { g, order, colors: vec![None; g.num_edges()] };
    match (first, s.order.first().copied()) {
        (Some(c), Some(e)) => {
            if s.fits(e, c) {
                s.colors[e] = Some(c);
                s.run(1, visit);
            }
        }
        _ => s.run(0, visit),
    }
}

/// Colorings whose first searched edge has color `first`; the three
/// partitions together are all colorings. Unsorted.
pub fn enumerate_partition(g: &EmbeddedGraph, opts: OracleOptions, first: Color) -> Vec<ColorAssignment> {
    let mut out = Vec::new();
    if g.num_edges() == 0 {
        return out;
    }
    search(g, opts, Some(first), &mut |cs| {
        out.push(ColorAssignment(cs.iter().map(|c| c.expect("complete")).collect()))
    });
    out
}

/// All proper 3-edge colorings, sorted lexicographically by the color
/// sequence in edge-id order.
pub fn enumerate_colorings(g: &EmbeddedGraph) -> Vec<ColorAssignment> {
    enumerate_colorings_with(g, OracleOptions::default())
}

pub fn enumerate_colorings_with(g: &EmbeddedGraph, opts: OracleOptions) -> Vec<ColorAssignment> {
    if g.num_edges() == 0 {
        return vec![ColorAssignment(Vec::new())];
    }
    let mut out: Vec<ColorAssignment> = Color::ALL.into_iter().flat_map(|c| enumerate_partition(g, opts, c)).collect();
    out.sort();
    out
}

pub fn count_colorings(g: &EmbeddedGraph) -> u64 {
    if g.num_edges() == 0 {
        return 1;
    }
    let mut n = 0u64;
    search(g, OracleOptions::default(), None, &mut |_| n += 1);
    n
}

pub const RAW_SCAN_MAX_EDGES: usize = 8;

/// Test all `3^E` assignments directly. Only for tiny graphs.
pub fn raw_scan(g: &EmbeddedGraph) -> Result<Vec<ColorAssignment>, OracleError> {
    let e = g.num_edges();
    if e > RAW_SCAN_MAX_EDGES {
        return Err(OracleError::TooManyEdges { max: RAW_SCAN_MAX_EDGES, got: e });
    }
    let mut out = Vec::new();
    for code in 0..3usize.pow(e as u32) {
        let mut rest = code;
        let mut colors = vec![Color::A; e];
        for slot in colors.iter_mut().rev() {
            *slot = Color::from_index(rest % 3);
            rest /= 3;
        }
        let a = ColorAssignment(colors);
        if a.is_admissible(g) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Entry `(out, in)` counts colorings whose outgoing legs read `out` and
/// incoming legs read `in`, each leg colored by its edge.
pub fn count_matrix_oracle(g: &EmbeddedGraph) -> CountMatrix {
    let mut m = CountMatrix::zero(g.legs_in().len(), g.legs_out().len());
    for col in enumerate_colorings(g) {
        let read = |legs: &[usize]| legs.iter().map(|&h| col.get(g.edge_of(h))).collect::<Vec<_>>();
        m.add(read(g.legs_out()), read(g.legs_in()), BigUint::from(1u32));
    }
    m
}

/// A `K4` value on every face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring(Vec<K4Element>);

impl FaceColoring {
    pub fn get(&self, face: usize) -> K4Element {
        self.0[face]
    }

    pub fn values(&self) -> &[K4Element] {
        &self.0
    }

    /// Faces on the two sides of every edge differ.
    pub fn is_proper(&self, g: &EmbeddedGraph, face_of: &[usize]) -> bool {
        g.edges().iter().all(|&[x, y]| self.0[face_of[x]] != self.0[face_of[y]])
    }
}

impl fmt::Display for FaceColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "face{i}={v}")?;
        }
        Ok(())
    }
}

/// Color the face of half-edge 0 by `1` and every other face by the
/// product of edge colors crossed on a breadth-first path to it. Every
/// edge is checked, not only the tree edges, so a coloring that is not
/// path independent is reported.
pub fn tait_face_coloring(g: &EmbeddedGraph, col: &ColorAssignment) -> Result<FaceColoring, OracleError> {
    let report = g.validate()?;
    if !g.is_closed() {
        return Err(GraphError::Malformed("face coloring needs a closed graph".into()).into());
    }
    if report.genus > 0 {
        return Err(GraphError::NotPlanar { genus: report.genus }.into());
    }
    if report.component_count > 1 {
        return Err(GraphError::Disconnected { components: report.component_count }.into());
    }
    if col.0.len() != g.num_edges() {
        return Err(OracleError::NotAdmissible("one color per edge required".into()));
    }
    let faces = &report.faces;
    let mut value: Vec<Option<K4Element>> = vec![None; faces.len()];
    if faces.is_empty() {
        return Ok(FaceColoring(Vec::new()));
    }
    let base = report.face_of[0];
    value[base] = Some(K4Element::ONE);
    let mut queue = VecDeque::from([base]);
    while let Some(f) = queue.pop_front() {
        let here = value[f].expect("queued faces are colored");
        for &d in &faces[f] {
            let e = g.edge_of(d);
            let across = report.face_of[g.partner(d)];
            let there = here * col.get(e).to_k4();
            match value[across] {
                None => {
                    value[across] = Some(there);
                    queue.push_back(across);
                }
                Some(v) if v != there => return Err(OracleError::InconsistentHolonomy { face: across, edge: e }),
                Some(_) => {}
            }
        }
    }
    Ok(FaceColoring(value.into_iter().map(|v| v.expect("connected dual")).collect()))
}

/// The `K4` product of the strand colors at every internal layer boundary
/// of `w`, which must recompose to a map isomorphic to `g`.
pub fn cross_section_products(
    g: &EmbeddedGraph,
    col: &ColorAssignment,
    w: &MorphismWord,
) -> Result<Vec<K4Element>, OracleError> {
    if col.0.len() != g.num_edges() {
        return Err(OracleError::WidthMismatch("one color per edge required".into()));
    }
    let traced = recompose_traced(w).map_err(|e| OracleError::WidthMismatch(alloc::format!("{e}")))?;
    let iso = traced
        .graph
        .isomorphism_to(g)
        .ok_or_else(|| OracleError::WidthMismatch("word does not recompose to this graph".into()))?;
    let edge_map: Vec<EdgeId> = traced.graph.edges().iter().map(|&[x, _]| g.edge_of(iso[x])).collect();
    let last = traced.strand_edges.len().saturating_sub(1);
    Ok(traced.strand_edges[1.min(last)..last]
        .iter()
        .map(|b| k4_word_product(b.iter().map(|&e| col.get(edge_map[e]).to_k4())))
        .collect())
}
