//! Trivalent graphs embedded in oriented surfaces, stored as combinatorial
//! maps.
//!
//! Every half-edge either sits in one of the three counterclockwise slots of
//! a vertex, or is a boundary leg. Legs are ordered: `legs_in` are the
//! strands entering from the bottom boundary circle and `legs_out` the
//! strands leaving through the top one, both read left to right from the
//! base point. For face tracing the legs are gathered around one virtual
//! boundary vertex whose counterclockwise order is
//! `out_0, .., out_{m-1}, in_{n-1}, .., in_0`; this is the cylinder with its
//! two boundary circles capped and joined along the (never crossed) base
//! point line.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

pub type HalfEdgeId = usize;
pub type EdgeId = usize;
pub type VertexId = usize;

/// Where a half-edge is attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Slot { vertex: VertexId, slot: u8 },
    In(usize),
    Out(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("MalformedGraph: {0}")]
    Malformed(String),
    #[error("NotPlanar: genus {genus}")]
    NotPlanar { genus: usize },
    #[error("Disconnected: {components} components")]
    Disconnected { components: usize },
    #[error("UnknownName: {0}")]
    UnknownName(String),
}

fn malformed<T>(msg: String) -> Result<T, GraphError> {
    Err(GraphError::Malformed(msg))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotations: Vec<[HalfEdgeId; 3]>,
    edges: Vec<[HalfEdgeId; 2]>,
    legs_in: Vec<HalfEdgeId>,
    legs_out: Vec<HalfEdgeId>,
    partner: Vec<HalfEdgeId>,
    edge_of: Vec<EdgeId>,
    place: Vec<Place>,
}

/// Faces, genus and component count of an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Closed walks of half-edges; each half-edge is followed by
    /// `rotation_successor(partner(h))`.
    pub faces: Vec<Vec<HalfEdgeId>>,
    /// Face index of every half-edge.
    pub face_of: Vec<usize>,
    /// Sum of the genera of the connected components.
    pub genus: usize,
    /// Zero only for the empty graph.
    pub component_count: usize,
}

impl EmbeddedGraph {
    /// Build a graph, checking every structural invariant.
    ///
    /// Half-edge ids must be exactly `0..H`, each used once either in a
    /// rotation slot or as a leg, and each paired by exactly one edge.
    pub fn new(
        rotations: Vec<Vec<HalfEdgeId>>,
        edges: Vec<[HalfEdgeId; 2]>,
        legs_in: Vec<HalfEdgeId>,
        legs_out: Vec<HalfEdgeId>,
    ) -> Result<Self, GraphError> {
        let total = rotations.iter().map(|r| r.len()).sum::<usize>() + legs_in.len() + legs_out.len();
        let mut place: Vec<Option<Place>> = vec![None; total];
        let mut put = |h: HalfEdgeId, p: Place| -> Result<(), GraphError> {
            if h >= total {
                return malformed(alloc::format!("half-edge {h} out of range; ids must be dense in 0..{total}"));
            }
            if place[h].is_some() {
                return malformed(alloc::format!("half-edge {h} attached twice"));
            }
            place[h] = Some(p);
            Ok(())
        };
        let mut rots = Vec::with_capacity(rotations.len());
        for (v, r) in rotations.iter().enumerate() {
            if r.len() != 3 {
                return malformed(alloc::format!("vertex {v} has valency {}, trivalence requires 3", r.len()));
            }
            for (slot, &h) in r.iter().enumerate() {
                put(h, Place::Slot { vertex: v, slot: slot as u8 })?;
            }
            rots.push([r[0], r[1], r[2]]);
        }
        for (i, &h) in legs_in.iter().enumerate() {
            put(h, Place::In(i))?;
        }
        for (i, &h) in legs_out.iter().enumerate() {
            put(h, Place::Out(i))?;
        }
        let place: Vec<Place> = place.into_iter().map(|p| p.expect("dense by counting")).collect();

        let mut partner = vec![usize::MAX; total];
        let mut edge_of = vec![usize::MAX; total];
        for (e, &[x, y]) in edges.iter().enumerate() {
            for h in [x, y] {
                if h >= total {
                    return malformed(alloc::format!("edge {e} uses unknown half-edge {h}"));
                }
                if edge_of[h] != usize::MAX {
                    return malformed(alloc::format!("half-edge {h} belongs to two edges"));
                }
            }
            if x == y {
                return malformed(alloc::format!("edge {e} pairs half-edge {x} with itself"));
            }
            partner[x] = y;
            partner[y] = x;
            edge_of[x] = e;
            edge_of[y] = e;
        }
        if let Some(h) = partner.iter().position(|&p| p == usize::MAX) {
            return malformed(alloc::format!("half-edge {h} is not paired by any edge"));
        }
        Ok(EmbeddedGraph { rotations: rots, edges, legs_in, legs_out, partner, edge_of, place })
    }

    pub fn empty() -> Self {
        EmbeddedGraph::new(Vec::new(), Vec::new(), Vec::new(), Vec::new()).expect("empty graph")
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_half_edges(&self) -> usize {
        self.partner.len()
    }

    pub fn rotation(&self, v: VertexId) -> [HalfEdgeId; 3] {
        self.rotations[v]
    }

    pub fn rotations(&self) -> &[[HalfEdgeId; 3]] {
        &self.rotations
    }

    pub fn edge(&self, e: EdgeId) -> [HalfEdgeId; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> &[[HalfEdgeId; 2]] {
        &self.edges
    }

    pub fn legs_in(&self) -> &[HalfEdgeId] {
        &self.legs_in
    }

    pub fn legs_out(&self) -> &[HalfEdgeId] {
        &self.legs_out
    }

    pub fn is_closed(&self) -> bool {
        self.legs_in.is_empty() && self.legs_out.is_empty()
    }

    pub fn partner(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.partner[h]
    }

    pub fn edge_of(&self, h: HalfEdgeId) -> EdgeId {
        self.edge_of[h]
    }

    pub fn place(&self, h: HalfEdgeId) -> Place {
        self.place[h]
    }

    pub fn vertex_of(&self, h: HalfEdgeId) -> Option<VertexId> {
        match self.place[h] {
            Place::Slot { vertex, .. } => Some(vertex),
            _ => None,
        }
    }

    pub fn is_out_leg(&self, h: HalfEdgeId) -> bool {
        matches!(self.place[h], Place::Out(_))
    }

    pub fn is_leg(&self, h: HalfEdgeId) -> bool {
        !matches!(self.place[h], Place::Slot { .. })
    }

    /// Counterclockwise successor of `h` around its vertex, or around the
    /// virtual boundary vertex for legs.
    pub fn rotation_successor(&self, h: HalfEdgeId) -> HalfEdgeId {
        let (n, m) = (self.legs_in.len(), self.legs_out.len());
        match self.place[h] {
            Place::Slot { vertex, slot } => self.rotations[vertex][(slot as usize + 1) % 3],
            Place::Out(j) => {
                if j + 1 < m {
                    self.legs_out[j + 1]
                } else if n > 0 {
                    self.legs_in[n - 1]
                } else {
                    self.legs_out[0]
                }
            }
            Place::In(i) => {
                if i > 0 {
                    self.legs_in[i - 1]
                } else if m > 0 {
                    self.legs_out[0]
                } else {
                    self.legs_in[n - 1]
                }
            }
        }
    }

    /// Counterclockwise successor at a vertex (never a leg).
    pub fn ccw(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.rotation_successor(h)
    }

    /// Next half-edge along a face: partner, then rotation successor.
    pub fn face_successor(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.rotation_successor(self.partner[h])
    }

    /// The first half-edge of the boundary rotation, if there are legs.
    pub fn boundary_start(&self) -> Option<HalfEdgeId> {
        self.legs_out.first().copied().or_else(|| self.legs_in.last().copied())
    }

    pub fn has_loop_at(&self, v: VertexId) -> bool {
        self.rotations[v].iter().any(|&h| self.vertex_of(self.partner[h]) == Some(v))
    }

    pub fn has_loop(&self) -> bool {
        (0..self.num_vertices()).any(|v| self.has_loop_at(v))
    }

    /// Connected components as lists of half-edges, each sorted, ordered by
    /// their smallest half-edge. The virtual boundary vertex joins all legs.
    pub fn components(&self) -> Vec<Vec<HalfEdgeId>> {
        let h = self.num_half_edges();
        let mut comp = vec![usize::MAX; h];
        let mut out = Vec::new();
        for s in 0..h {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(d) = stack.pop() {
                members.push(d);
                for nb in [self.rotation_successor(d), self.partner[d]] {
                    if comp[nb] == usize::MAX {
                        comp[nb] = id;
                        stack.push(nb);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn faces(&self) -> (Vec<Vec<HalfEdgeId>>, Vec<usize>) {
        let h = self.num_half_edges();
        let mut face_of = vec![usize::MAX; h];
        let mut faces = Vec::new();
        for s in 0..h {
            if face_of[s] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = s;
            while face_of[d] == usize::MAX {
                face_of[d] = id;
                walk.push(d);
                d = self.face_successor(d);
            }
            faces.push(walk);
        }
        (faces, face_of)
    }

    /// Trace faces and compute the genus of every component through
    /// `V - E + F = 2 - 2g`.
    pub fn validate(&self) -> Result<EmbeddingReport, GraphError> {
        let (faces, face_of) = self.faces();
        let comps = self.components();
        let mut genus = 0usize;
        for members in &comps {
            let mut vertices = Vec::new();
            let mut boundary = false;
            let mut face_ids = Vec::new();
            for &d in members {
                match self.place[d] {
                    Place::Slot { vertex, .. } => vertices.push(vertex),
                    _ => boundary = true,
                }
                face_ids.push(face_of[d]);
            }
            vertices.sort_unstable();
            vertices.dedup();
            face_ids.sort_unstable();
            face_ids.dedup();
            let v = vertices.len() as i64 + boundary as i64;
            let e = (members.len() / 2) as i64;
            let f = face_ids.len() as i64;
            let twice = 2 - v + e - f;
            if twice < 0 || twice % 2 != 0 {
                return malformed(alloc::format!(
                    "Euler characteristic {} is not that of a closed orientable surface",
                    v - e + f
                ));
            }
            genus += (twice / 2) as usize;
        }
        Ok(EmbeddingReport { faces, face_of, genus, component_count: comps.len() })
    }

    pub fn genus(&self) -> usize {
        self.validate().map(|r| r.genus).unwrap_or(0)
    }

    /// Edges whose removal increases the number of connected components,
    /// found by a single low-link depth-first traversal. Legs count as
    /// degree-one endpoints, so every leg edge attached to a vertex is a
    /// bridge.
    pub fn find_bridges(&self) -> Vec<EdgeId> {
        let nv = self.num_vertices();
        let node = |h: HalfEdgeId| -> usize {
            match self.place[h] {
                Place::Slot { vertex, .. } => vertex,
                Place::In(i) => nv + i,
                Place::Out(j) => nv + self.legs_in.len() + j,
            }
        };
        let nodes = nv + self.legs_in.len() + self.legs_out.len();
        let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); nodes];
        for (e, &[x, y]) in self.edges.iter().enumerate() {
            let (u, v) = (node(x), node(y));
            if u == v {
                continue;
            }
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut disc = vec![usize::MAX; nodes];
        let mut low = vec![0usize; nodes];
        let mut bridges = Vec::new();
        let mut time = 0;
        for root in 0..nodes {
            if disc[root] != usize::MAX {
                continue;
            }
            // (node, parent edge, next adjacency index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (u, pe, ref mut i)) = stack.last_mut() {
                if *i < adj[u].len() {
                    let (v, e) = adj[u][*i];
                    *i += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[v] == usize::MAX {
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        stack.push((v, e, 0));
                    } else {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            bridges.push(pe);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    fn labeling(&self, start: HalfEdgeId) -> (Vec<u32>, Vec<HalfEdgeId>) {
        let mut label = vec![u32::MAX; self.num_half_edges()];
        let mut order = vec![start];
        label[start] = 0;
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for nb in [self.rotation_successor(d), self.partner[d]] {
                if label[nb] == u32::MAX {
                    label[nb] = order.len() as u32;
                    order.push(nb);
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(order.len() * 3);
        for &d in &order {
            code.push(label[self.rotation_successor(d)]);
            code.push(label[self.partner[d]]);
            code.push(self.is_leg(d) as u32);
        }
        (code, order)
    }

    fn min_labeling(&self, members: &[HalfEdgeId]) -> (Vec<u32>, Vec<HalfEdgeId>) {
        let mut best: Option<(Vec<u32>, Vec<HalfEdgeId>)> = None;
        for &s in members {
            let cand = self.labeling(s);
            if best.as_ref().is_none_or(|b| cand.0 < b.0) {
                best = Some(cand);
            }
        }
        best.expect("nonempty component")
    }

    /// A byte string equal for two graphs exactly when they are isomorphic
    /// as combinatorial maps with the same ordered legs.
    ///
    /// Each closed component is relabeled breadth-first from every
    /// half-edge and the lexicographically smallest labeling is kept; the
    /// component holding the legs is relabeled from its first boundary
    /// half-edge, which the leg order pins down.
    pub fn canonical_code(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let push = |out: &mut Vec<u8>, x: u32| out.extend_from_slice(&x.to_le_bytes());
        push(&mut out, self.legs_in.len() as u32);
        push(&mut out, self.legs_out.len() as u32);
        let mut closed = Vec::new();
        for members in self.components() {
            if members.iter().any(|&d| self.is_leg(d)) {
                let (code, _) = self.labeling(self.boundary_start().expect("legs exist"));
                push(&mut out, code.len() as u32);
                code.iter().for_each(|&x| push(&mut out, x));
            } else {
                closed.push(self.min_labeling(&members).0);
            }
        }
        closed.sort();
        for code in closed {
            push(&mut out, code.len() as u32);
            code.iter().for_each(|&x| push(&mut out, x));
        }
        out
    }

    /// A half-edge bijection `self -> other` realizing a map isomorphism
    /// that preserves leg order. Only connected graphs are supported.
    pub fn isomorphism_to(&self, other: &EmbeddedGraph) -> Option<Vec<HalfEdgeId>> {
        if self.num_half_edges() != other.num_half_edges()
            || self.legs_in.len() != other.legs_in.len()
            || self.legs_out.len() != other.legs_out.len()
        {
            return None;
        }
        if self.num_half_edges() == 0 {
            return Some(Vec::new());
        }
        if self.components().len() != 1 || other.components().len() != 1 {
            return None;
        }
        let (mine, starts): (_, Vec<HalfEdgeId>) = match self.boundary_start() {
            Some(s) => (self.labeling(s), vec![other.boundary_start()?]),
            None => (self.labeling(0), (0..other.num_half_edges()).collect()),
        };
        for s in starts {
            let (code, order) = other.labeling(s);
            if code == mine.0 {
                let mut map = vec![0; self.num_half_edges()];
                for (a, b) in mine.1.iter().zip(order) {
                    map[*a] = b;
                }
                return Some(map);
            }
        }
        None
    }

    /// Build a graph from a straight-line drawing of a simple trivalent
    /// graph: rotations are read off the integer coordinates.
    /// Edge `k = (u, v)` gets half-edge `2k` at `u` and `2k + 1` at `v`.
    pub fn from_drawing(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut incident: Vec<Vec<(HalfEdgeId, (i64, i64))>> = vec![Vec::new(); coords.len()];
        let mut pairs = Vec::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            let (du, dv) = (
                (coords[v].0 - coords[u].0, coords[v].1 - coords[u].1),
                (coords[u].0 - coords[v].0, coords[u].1 - coords[v].1),
            );
            incident[u].push((2 * k, du));
            incident[v].push((2 * k + 1, dv));
            pairs.push([2 * k, 2 * k + 1]);
        }
        let rotations = incident
            .into_iter()
            .map(|mut inc| {
                inc.sort_by(|a, b| angle_order(a.1, b.1));
                inc.into_iter().map(|(h, _)| h).collect()
            })
            .collect();
        EmbeddedGraph::new(rotations, pairs, Vec::new(), Vec::new())
    }
}

/// Counterclockwise order of direction vectors starting from the positive
/// x axis, with exact integer arithmetic.
fn angle_order(a: (i64, i64), b: (i64, i64)) -> core::cmp::Ordering {
    let half = |p: (i64, i64)| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

pub const CORPUS_NAMES: [&str; 7] = ["theta", "dumbbell", "tetrahedron", "prism", "cube", "k33", "petersen"];

/// Named fixtures. All are closed; every one except `k33` and `petersen`
/// is embedded in the sphere.
pub fn corpus(name: &str) -> Result<EmbeddedGraph, GraphError> {
    let g = match name {
        "theta" => EmbeddedGraph::new(vec![vec![0, 1, 2], vec![5, 4, 3]], vec![[0, 3], [1, 4], [2, 5]], vec![], vec![]),
        "dumbbell" => {
            EmbeddedGraph::new(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![[0, 1], [2, 3], [4, 5]], vec![], vec![])
        }
        "tetrahedron" => EmbeddedGraph::from_drawing(
            &[(0, 0), (0, 10), (-9, -5), (9, -5)],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
        ),
        "prism" => EmbeddedGraph::from_drawing(
            &[(0, 10), (-9, -5), (9, -5), (0, 4), (-3, -2), (3, -2)],
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        ),
        "cube" => EmbeddedGraph::from_drawing(
            &[(-10, -10), (10, -10), (10, 10), (-10, 10), (-4, -4), (4, -4), (4, 4), (-4, 4)],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        ),
        "k33" => k33_torus(),
        "petersen" => EmbeddedGraph::from_drawing(
            &[
                (0, 100),
                (95, 31),
                (59, -81),
                (-59, -81),
                (-95, 31),
                (0, 50),
                (48, 15),
                (29, -40),
                (-29, -40),
                (-48, 15),
            ],
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        ),
        other => return Err(GraphError::UnknownName(other.to_string())),
    }?;
    Ok(g)
}

/// `K_{3,3}` on the torus: the hexagon `0..6` with its three long
/// diagonals, where the diagonals at even vertices leave inwards and at
/// odd vertices outwards.
fn k33_torus() -> Result<EmbeddedGraph, GraphError> {
    // hexagon edge i joins i and i+1: half-edge 2i at i, 2i+1 at i+1
    // diagonal j joins j and j+3: half-edge 12+2j at j, 13+2j at j+3
    let diag = |v: usize| if v < 3 { 12 + 2 * v } else { 13 + 2 * (v - 3) };
    let rotations = (0..6)
        .map(|v| {
            let next = 2 * v;
            let prev = 2 * ((v + 5) % 6) + 1;
            if v % 2 == 0 {
                vec![next, diag(v), prev]
            } else {
                vec![next, prev, diag(v)]
            }
        })
        .collect();
    let mut edges: Vec<[HalfEdgeId; 2]> = (0..6).map(|i| [2 * i, 2 * i + 1]).collect();
    edges.extend((0..3).map(|j| [12 + 2 * j, 13 + 2 * j]));
    EmbeddedGraph::new(rotations, edges, vec![], vec![])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deletion_bridges(g: &EmbeddedGraph) -> Vec<EdgeId> {
        // quadratic oracle: an edge is a bridge iff its endpoints are
        // disconnected once it is removed
        let nv = g.num_vertices();
        let node = |h: HalfEdgeId| match g.place(h) {
            Place::Slot { vertex, .. } => vertex,
            Place::In(i) => nv + i,
            Place::Out(j) => nv + g.legs_in().len() + j,
        };
        let nodes = nv + g.legs_in().len() + g.legs_out().len();
        let mut out = Vec::new();
        for skip in 0..g.num_edges() {
            let [x, y] = g.edge(skip);
            let (s, t) = (node(x), node(y));
            let mut seen = vec![false; nodes];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for (e, &[a, b]) in g.edges().iter().enumerate() {
                    if e == skip {
                        continue;
                    }
                    let (p, q) = (node(a), node(b));
                    for (from, to) in [(p, q), (q, p)] {
                        if from == u && !seen[to] {
                            seen[to] = true;
                            stack.push(to);
                        }
                    }
                }
            }
            if !seen[t] {
                out.push(skip);
            }
        }
        out
    }

    #[test]
    fn corpus_embeddings() {
        let expect = [
            ("theta", 2, 3, 0, 3),
            ("dumbbell", 2, 3, 0, 3),
            ("tetrahedron", 4, 6, 0, 4),
            ("prism", 6, 9, 0, 5),
            ("cube", 8, 12, 0, 6),
            ("k33", 6, 9, 1, 3),
        ];
        for (name, v, e, genus, f) in expect {
            let g = corpus(name).unwrap();
            assert_eq!(g.num_vertices(), v, "{name}");
            assert_eq!(g.num_edges(), e, "{name}");
            let r = g.validate().unwrap();
            assert_eq!(r.genus, genus, "{name}");
            assert_eq!(r.faces.len(), f, "{name}");
            assert_eq!(r.component_count, 1, "{name}");
        }
        let p = corpus("petersen").unwrap();
        assert_eq!((p.num_vertices(), p.num_edges()), (10, 15));
        assert!(p.validate().unwrap().genus >= 1);
        assert!(matches!(corpus("nope"), Err(GraphError::UnknownName(_))));
    }

    #[test]
    fn face_lengths_cover_every_half_edge() {
        for name in CORPUS_NAMES {
            let g = corpus(name).unwrap();
            let r = g.validate().unwrap();
            let total: usize = r.faces.iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * g.num_edges());
        }
    }

    #[test]
    fn valency_two_is_rejected() {
        let err = EmbeddedGraph::new(vec![vec![0, 1]], vec![[0, 1]], vec![], vec![]).unwrap_err();
        assert!(matches!(err, GraphError::Malformed(ref m) if m.contains("valency 2")));
    }

    #[test]
    fn unpaired_and_doubly_attached_half_edges_are_rejected() {
        assert!(EmbeddedGraph::new(vec![vec![0, 1, 2]], vec![[0, 1]], vec![], vec![]).is_err());
        assert!(EmbeddedGraph::new(vec![vec![0, 1, 1]], vec![[0, 1]], vec![], vec![]).is_err());
        assert!(EmbeddedGraph::new(vec![vec![0, 1, 2]], vec![[0, 0], [1, 2]], vec![], vec![]).is_err());
    }

    #[test]
    fn bare_edge_between_legs() {
        let g = EmbeddedGraph::new(vec![], vec![[0, 1]], vec![0], vec![1]).unwrap();
        let r = g.validate().unwrap();
        assert_eq!(r.genus, 0);
        assert_eq!(r.faces.len(), 2);
    }

    #[test]
    fn bridges_of_fixtures() {
        assert_eq!(corpus("dumbbell").unwrap().find_bridges(), vec![1]);
        assert!(corpus("theta").unwrap().find_bridges().is_empty());
        for name in CORPUS_NAMES {
            let g = corpus(name).unwrap();
            assert_eq!(g.find_bridges(), deletion_bridges(&g), "{name}");
        }
    }

    #[test]
    fn two_looped_triangles_joined_by_an_edge() {
        // triangle (0,1,2) and triangle (3,4,5) joined by 0-3; every other
        // vertex carries a pendant edge to a looped vertex
        let mut rotations: Vec<Vec<HalfEdgeId>> = Vec::new();
        let mut edges: Vec<[HalfEdgeId; 2]> = Vec::new();
        let mut next = 0;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let mut slots: Vec<Vec<HalfEdgeId>> = vec![Vec::new(); 6];
        let connect = |a: usize,
                       b: usize,
                       slots: &mut Vec<Vec<HalfEdgeId>>,
                       edges: &mut Vec<[HalfEdgeId; 2]>,
                       h: (usize, usize)| {
            slots[a].push(h.0);
            slots[b].push(h.1);
            edges.push([h.0, h.1]);
        };
        for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)] {
            let h = (fresh(), fresh());
            connect(a, b, &mut slots, &mut edges, h);
        }
        let mut loopers = Vec::new();
        for v in [1, 2, 4, 5] {
            let (x, y) = (fresh(), fresh());
            slots[v].push(x);
            let (l1, l2) = (fresh(), fresh());
            loopers.push(vec![y, l1, l2]);
            edges.push([x, y]);
            edges.push([l1, l2]);
        }
        rotations.extend(slots);
        rotations.extend(loopers);
        let g = EmbeddedGraph::new(rotations, edges, vec![], vec![]).unwrap();
        let bridges = g.find_bridges();
        assert!(bridges.contains(&6));
        assert_eq!(bridges, deletion_bridges(&g));
    }

    #[test]
    fn canonical_codes() {
        let theta = corpus("theta").unwrap();
        let relabeled =
            EmbeddedGraph::new(vec![vec![4, 0, 2], vec![1, 5, 3]], vec![[4, 3], [0, 5], [2, 1]], vec![], vec![])
                .unwrap();
        assert_eq!(relabeled.genus(), 0);
        assert_eq!(theta.canonical_code(), relabeled.canonical_code());
        assert_ne!(theta.canonical_code(), corpus("dumbbell").unwrap().canonical_code());
        let flipped =
            EmbeddedGraph::new(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![[0, 3], [1, 4], [2, 5]], vec![], vec![])
                .unwrap();
        assert_eq!(flipped.genus(), 1);
        assert_ne!(theta.canonical_code(), flipped.canonical_code());
        let iso = theta.isomorphism_to(&relabeled).unwrap();
        for h in 0..6 {
            assert_eq!(iso[theta.partner(h)], relabeled.partner(iso[h]));
            assert_eq!(iso[theta.ccw(h)], relabeled.ccw(iso[h]));
        }
    }

    #[test]
    fn leg_order_matters_for_codes() {
        let a = EmbeddedGraph::new(vec![vec![0, 1, 2]], vec![[0, 3], [1, 4], [2, 5]], vec![3, 4], vec![5]).unwrap();
        let b = EmbeddedGraph::new(vec![vec![0, 1, 2]], vec![[0, 3], [1, 4], [2, 5]], vec![4, 3], vec![5]).unwrap();
        assert_ne!(a.canonical_code(), b.canonical_code());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(100))]
        #[test]
        fn bridges_match_deletion(seed in proptest::prelude::any::<u64>(), half in 1usize..7, planar in proptest::prelude::any::<bool>()) {
            let mut rng = crate::random::seeded(seed);
            let g = if planar {
                crate::random::random_planar_map(&mut rng, 2 * half, 5)
            } else {
                crate::random::random_trivalent_map(&mut rng, 2 * half)
            };
            proptest::prop_assert_eq!(g.find_bridges(), deletion_bridges(&g));
        }
    }
}
