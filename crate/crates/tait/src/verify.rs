//! The invariant battery behind `tait verify`.

use std::fmt;

use num_bigint::BigUint;
use tait_core::oracle::{raw_scan, RAW_SCAN_MAX_EDGES};
use tait_core::{
    count_matrix_oracle, cross_section_products, evaluate_closed, recompose, reslice_distinct, slice,
    tait_face_coloring, EmbeddedGraph, EvalError, GraphError, SliceError,
};

use crate::parallel::{enumerate_colorings_par, evaluate_matrix_par};

/// Colorings beyond this many are not enumerated one by one.
pub const ENUMERATION_LIMIT: u64 = 100_000;
/// Gluing is checked only at cuts no wider than this.
pub const GLUING_MAX_WIDTH: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.ok { "ok" } else { "FAIL" }, self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BatteryError {
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl From<GraphError> for BatteryError {
    fn from(e: GraphError) -> Self {
        BatteryError::Slice(e.into())
    }
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
    Check { name, ok, detail: detail.into() }
}

/// Runs every check that applies to `g`. Errors are reserved for graphs
/// the battery cannot start on (not genus 0, disconnected, ...); a failed
/// check is reported, not raised.
pub fn run_battery(g: &EmbeddedGraph, seeds: u64) -> Result<Vec<Check>, BatteryError> {
    let report = g.validate()?;
    if report.genus > 0 {
        return Err(GraphError::NotPlanar { genus: report.genus }.into());
    }
    let mut out = Vec::new();
    let w = slice(g)?;
    out.push(check("slice", true, format!("{} layers, width {}", w.len(), w.max_width())));

    let back = recompose(&w)?;
    out.push(check("round-trip", back.canonical_code() == g.canonical_code(), "recomposed map is isomorphic"));

    let m = evaluate_matrix_par(&w)?;
    if !g.is_closed() {
        let ok = m == count_matrix_oracle(g);
        out.push(check("matrix-oracle", ok, format!("{} nonzero entries", m.nonzero_count())));
    }

    let mut cuts = 0;
    let mut glued = true;
    for k in 1..w.len() {
        let (head, tail) = w.split_at(k);
        if head.output_width() > GLUING_MAX_WIDTH {
            continue;
        }
        cuts += 1;
        let composed = evaluate_matrix_par(&head)?.then(&evaluate_matrix_par(&tail)?)?;
        glued &= composed == m;
    }
    out.push(check("gluing", glued, format!("{cuts} cuts")));

    if !g.is_closed() {
        return Ok(out);
    }
    let count = evaluate_closed(&w)?;

    let mut same = true;
    for seed in 0..seeds {
        same &= evaluate_closed(&reslice_distinct(g, seed)?)? == count;
    }
    out.push(check("seeds", same, format!("{seeds} reslicings give {count}")));

    let bridges = g.find_bridges();
    if !bridges.is_empty() {
        out.push(check("bridge", count == BigUint::ZERO, format!("{} bridges, count {count}", bridges.len())));
    }

    if count > BigUint::from(ENUMERATION_LIMIT) {
        out.push(check("oracle", true, format!("skipped: {count} colorings")));
        return Ok(out);
    }
    let colorings = enumerate_colorings_par(g);
    out.push(check("oracle", BigUint::from(colorings.len()) == count, format!("{} colorings", colorings.len())));
    if g.num_edges() <= RAW_SCAN_MAX_EDGES {
        let scanned = raw_scan(g).map(|v| v.len()).unwrap_or(usize::MAX);
        out.push(check("raw-scan", scanned == colorings.len(), format!("{scanned} colorings")));
    }

    let mut sections = 0usize;
    let mut trivial = true;
    let mut proper = true;
    let (_, face_of) = g.faces();
    for col in &colorings {
        match cross_section_products(g, col, &w) {
            Ok(ps) => {
                sections += ps.len();
                trivial &= ps.iter().all(|&p| p.is_identity());
            }
            Err(_) => trivial = false,
        }
        match tait_face_coloring(g, col) {
            Ok(fc) => proper &= fc.is_proper(g, &face_of),
            Err(_) => proper = false,
        }
    }
    out.push(check("cross-sections", trivial, format!("{sections} products")));
    out.push(check("faces", proper, format!("{} face colorings", colorings.len())));
    Ok(out)
}
