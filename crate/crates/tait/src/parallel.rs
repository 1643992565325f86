//! Rayon versions of the embarrassingly parallel loops. Results are
//! assembled in a fixed order, so output does not depend on scheduling.

use rayon::prelude::*;
use tait_core::oracle::{enumerate_partition, OracleOptions};
use tait_core::tft::all_color_strings;
use tait_core::{
    enumerate_colorings, evaluate_state, Color, ColorAssignment, CountMatrix, EmbeddedGraph, EvalError, MorphismWord,
    StateVector,
};

/// One column per input string, computed concurrently.
pub fn evaluate_matrix_par(w: &MorphismWord) -> Result<CountMatrix, EvalError> {
    let columns = all_color_strings(w.input_width())
        .into_par_iter()
        .map(|col| evaluate_state(w, &StateVector::basis(col.clone())).map(|s| (col, s)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountMatrix::from_columns(w.input_width(), w.output_width(), columns))
}

/// The three first-edge partitions run concurrently; sorted like
/// [`enumerate_colorings`].
pub fn enumerate_colorings_par(g: &EmbeddedGraph) -> Vec<ColorAssignment> {
    if g.num_edges() == 0 {
        return enumerate_colorings(g);
    }
    let parts: Vec<Vec<ColorAssignment>> =
        Color::ALL.par_iter().map(|&c| enumerate_partition(g, OracleOptions::default(), c)).collect();
    let mut out: Vec<ColorAssignment> = parts.into_iter().flatten().collect();
    out.sort();
    out
}
