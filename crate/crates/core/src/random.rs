//! Seeded random trivalent maps for property tests and benchmarks.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EmbeddedGraph, HalfEdgeId};
use crate::slicer::{recompose, Generator, GeneratorKind, MorphismWord};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random closed word with exactly `vertices` merge and split layers and
/// no cross-section wider than `max_width`. Its recomposition is always
/// connected: a cap may close off the last two strands of a component
/// only at the very end, and never a vertex-free circle. `vertices` must
/// be even and `max_width` at least 3.
pub fn random_closed_word<R: Rng>(rng: &mut R, vertices: usize, max_width: usize) -> MorphismWord {
    assert!(vertices.is_multiple_of(2), "a closed trivalent map has an even number of vertices");
    assert!(max_width >= 3);
    loop {
        if let Some(w) = try_closed_word(rng, vertices, max_width) {
            return w;
        }
    }
}

/// Union-find over strand ids, with the number of frontier strands per
/// component and, per strand, the far end of its vertex-free chain.
#[derive(Default)]
struct Strands {
    parent: Vec<usize>,
    live: Vec<usize>,
    other: Vec<Option<usize>>,
}

impl Strands {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> usize {
        let (a, b) = (self.find(x), self.find(y));
        if a != b {
            self.parent[b] = a;
            self.live[a] += self.live[b];
        }
        a
    }

    fn fresh(&mut self, root: Option<usize>) -> usize {
        let id = self.parent.len();
        let r = root.unwrap_or(id);
        self.parent.push(r);
        self.live.push(0);
        self.other.push(None);
        self.live[r] += 1;
        id
    }

    /// A cap of `x` and `y` before the end must neither close a
    /// vertex-free circle nor finish off a component.
    fn may_cap(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        let joined = if rx == ry { self.live[rx] } else { self.live[rx] + self.live[ry] };
        self.other[x] != Some(y) && joined > 2
    }

    fn touch_vertex(&mut self, s: usize) {
        if let Some(o) = self.other[s].take() {
            self.other[o] = None;
        }
    }
}

/// Gives up when only a vertex-free circle is left to close.
fn try_closed_word<R: Rng>(rng: &mut R, vertices: usize, max_width: usize) -> Option<MorphismWord> {
    let mut st = Strands::default();
    let mut strands: Vec<usize> = Vec::new();
    let mut layers = Vec::new();
    let mut left = vertices;
    while left > 0 || !strands.is_empty() {
        let w = strands.len();
        if left == 0 && w > 2 && (0..w - 1).all(|p| !st.may_cap(strands[p], strands[p + 1])) {
            return None;
        }
        let mut options: Vec<(GeneratorKind, u32)> = Vec::new();
        if w + 2 <= max_width && (left > 0 || w == 0) {
            options.push((GeneratorKind::Cup, 1));
        }
        if w >= 2 {
            options.push((GeneratorKind::Cap, if left == 0 { 1 } else { 2 }));
        }
        if left > 0 && w >= 2 {
            options.push((GeneratorKind::Merge, 3));
        }
        if left > 0 && w >= 1 && w < max_width {
            options.push((GeneratorKind::Split, 3));
        }
        let total: u32 = options.iter().map(|o| o.1).sum();
        let mut pick = rng.random_range(0..total);
        let kind = options
            .iter()
            .find(|o| {
                if pick < o.1 {
                    true
                } else {
                    pick -= o.1;
                    false
                }
            })
            .expect("weights cover the range")
            .0;
        let (consumed, _) = kind.arity();
        let pos = rng.random_range(0..=w - consumed);
        match kind {
            GeneratorKind::Cup => {
                let a = st.fresh(None);
                let b = st.fresh(Some(a));
                st.other[a] = Some(b);
                st.other[b] = Some(a);
                strands.splice(pos..pos, [a, b]);
            }
            GeneratorKind::Cap => {
                let (x, y) = (strands[pos], strands[pos + 1]);
                if left == 0 && w == 2 {
                    if st.other[x] == Some(y) {
                        return None;
                    }
                } else if !st.may_cap(x, y) {
                    continue;
                }
                let r = st.union(x, y);
                st.live[r] -= 2;
                match (st.other[x], st.other[y]) {
                    (Some(ox), Some(oy)) => {
                        st.other[ox] = Some(oy);
                        st.other[oy] = Some(ox);
                    }
                    (Some(o), None) | (None, Some(o)) => st.other[o] = None,
                    (None, None) => {}
                }
                strands.drain(pos..pos + 2);
            }
            GeneratorKind::Merge => {
                let (x, y) = (strands[pos], strands[pos + 1]);
                st.touch_vertex(x);
                st.touch_vertex(y);
                let r = st.union(x, y);
                st.live[r] -= 2;
                let up = st.fresh(Some(r));
                strands.splice(pos..pos + 2, [up]);
                left -= 1;
            }
            GeneratorKind::Split => {
                let x = strands[pos];
                st.touch_vertex(x);
                let r = st.find(x);
                st.live[r] -= 1;
                let (l, rr) = (st.fresh(Some(r)), st.fresh(Some(r)));
                strands.splice(pos..pos + 1, [l, rr]);
                left -= 1;
            }
        }
        layers.push(Generator { kind, pos });
    }
    Some(MorphismWord::new(0, layers).expect("widths tracked while generating"))
}

/// A random connected genus-0 trivalent map with `vertices` vertices: the
/// recomposition of [`random_closed_word`] with half-edge, vertex and edge
/// ids shuffled. Bridges and loops are common.
pub fn random_planar_map<R: Rng>(rng: &mut R, vertices: usize, max_width: usize) -> EmbeddedGraph {
    let w = random_closed_word(rng, vertices, max_width);
    let g = recompose(&w).expect("generator avoids free circles");
    debug_assert_eq!(g.components().len(), 1);
    relabel(&g, rng)
}

/// A random simple, bridgeless, genus-0 trivalent map. Starting from the
/// tetrahedron, each step subdivides two distinct edges on the boundary of
/// a random face and joins the two new vertices across that face; every
/// 3-connected planar cubic map arises this way. `vertices` must be even
/// and at least 4.
pub fn random_bridgeless_map<R: Rng>(rng: &mut R, vertices: usize) -> EmbeddedGraph {
    assert!(vertices >= 4 && vertices.is_multiple_of(2));
    let mut g = crate::graph::corpus("tetrahedron").expect("built in");
    while g.num_vertices() < vertices {
        let (faces, _) = g.faces();
        let face = &faces[rng.random_range(0..faces.len())];
        let i = rng.random_range(0..face.len());
        let mut j = rng.random_range(0..face.len() - 1);
        if j >= i {
            j += 1;
        }
        g = insert_chord(&g, face[i], face[j]);
    }
    relabel(&g, rng)
}

/// Subdivide the edges of darts `d1` and `d2` (on one face, distinct
/// edges) and join the new vertices by an edge inside that face.
fn insert_chord(g: &EmbeddedGraph, d1: HalfEdgeId, d2: HalfEdgeId) -> EmbeddedGraph {
    let n = g.num_half_edges();
    let (x, y) = ([n, n + 1, n + 2], [n + 3, n + 4, n + 5]);
    let mut edges: Vec<[HalfEdgeId; 2]> = Vec::with_capacity(g.num_edges() + 3);
    for &[a, b] in g.edges() {
        let mut cut = |d: HalfEdgeId, z: [HalfEdgeId; 3]| {
            let p = g.partner(d);
            edges.push([d, z[0]]);
            edges.push([z[1], p]);
        };
        if a == d1 || b == d1 {
            cut(d1, x);
        } else if a == d2 || b == d2 {
            cut(d2, y);
        } else {
            edges.push([a, b]);
        }
    }
    edges.push([x[2], y[2]]);
    let faces_before = g.faces().0.len();
    for (rx, ry) in [([0, 1, 2], [0, 1, 2]), ([1, 0, 2], [0, 1, 2]), ([0, 1, 2], [1, 0, 2]), ([1, 0, 2], [1, 0, 2])] {
        let mut rotations: Vec<Vec<HalfEdgeId>> = g.rotations().iter().map(|r| r.to_vec()).collect();
        rotations.push(rx.iter().map(|&k| x[k]).collect());
        rotations.push(ry.iter().map(|&k| y[k]).collect());
        let h = EmbeddedGraph::new(rotations, edges.clone(), vec![], vec![]).expect("valid pairing");
        if h.genus() == 0 && h.faces().0.len() == faces_before + 1 {
            return h;
        }
    }
    unreachable!("darts on a common face always admit a planar chord")
}

/// A random trivalent map of any genus: the `3V` half-edges are paired
/// uniformly at random. May be disconnected and may contain loops.
pub fn random_trivalent_map<R: Rng>(rng: &mut R, vertices: usize) -> EmbeddedGraph {
    assert!(vertices.is_multiple_of(2));
    let mut darts: Vec<HalfEdgeId> = (0..3 * vertices).collect();
    darts.shuffle(rng);
    let edges = darts.chunks(2).map(|c| [c[0], c[1]]).collect();
    let rotations = (0..vertices).map(|v| vec![3 * v, 3 * v + 1, 3 * v + 2]).collect();
    EmbeddedGraph::new(rotations, edges, vec![], vec![]).expect("perfect matching")
}

/// The same map under random renaming of half-edges, vertices and edges,
/// with each rotation started at a random slot. Leg order is preserved.
pub fn relabel<R: Rng>(g: &EmbeddedGraph, rng: &mut R) -> EmbeddedGraph {
    let mut perm: Vec<HalfEdgeId> = (0..g.num_half_edges()).collect();
    perm.shuffle(rng);
    let mut vorder: Vec<usize> = (0..g.num_vertices()).collect();
    vorder.shuffle(rng);
    let rotations = vorder
        .iter()
        .map(|&v| {
            let r = g.rotation(v);
            let k = rng.random_range(0..3);
            (0..3).map(|i| perm[r[(i + k) % 3]]).collect()
        })
        .collect();
    let mut edges: Vec<[HalfEdgeId; 2]> = g
        .edges()
        .iter()
        .map(|&[x, y]| if rng.random_bool(0.5) { [perm[x], perm[y]] } else { [perm[y], perm[x]] })
        .collect();
    edges.shuffle(rng);
    EmbeddedGraph::new(
        rotations,
        edges,
        g.legs_in().iter().map(|&h| perm[h]).collect(),
        g.legs_out().iter().map(|&h| perm[h]).collect(),
    )
    .expect("relabeling preserves validity")
}
