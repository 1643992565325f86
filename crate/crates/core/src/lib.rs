//! Exact Tait-coloring counts for trivalent maps.
//!
//! A planar trivalent map is sliced into a word of cup, cap, merge and
//! split layers; each layer acts on a sparse vector of edge-color strings
//! with big-integer coefficients, and the scalar left at the end is the
//! number of proper 3-edge colorings. A brute-force enumerator, the Klein
//! four-group products along cross-sections and the face 4-coloring
//! correspondence serve as independent checks. A bounded rewrite search
//! over finite group presentations lives alongside.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod graph;
pub mod k4;
pub mod oracle;
pub mod random;
pub mod slicer;
pub mod tft;
pub mod word_problem;
pub mod words;

pub use graph::{
    corpus, EdgeId, EmbeddedGraph, EmbeddingReport, GraphError, HalfEdgeId, Place, VertexId, CORPUS_NAMES,
};
pub use k4::{k4_mul, k4_word_product, Color, K4Element};
pub use oracle::{
    count_colorings, count_matrix_oracle, cross_section_products, enumerate_colorings, tait_face_coloring,
    ColorAssignment, FaceColoring, OracleError, OracleOptions,
};
pub use random::{random_bridgeless_map, random_closed_word, random_planar_map, random_trivalent_map, relabel, seeded};
pub use slicer::{
    recompose, recompose_traced, reslice_distinct, slice, Generator, GeneratorKind, MorphismWord, SliceError,
    TracedRecomposition,
};
pub use tft::{
    apply_generator, evaluate_closed, evaluate_matrix, evaluate_state, CountMatrix, EvalError, EvalStats, StateVector,
};
pub use word_problem::{bounded_cobordism_search, words_equal_k4, CobordismCertificate, MoveKind, RewriteMove};
pub use words::{free_reduce, GroupPresentation, Letter, PresentationError, Word};
