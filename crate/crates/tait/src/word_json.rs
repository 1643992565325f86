//! Morphism words as one line of JSON with a fixed field order:
//! `{"input_width": 0, "layers": [{"gen": "cup", "pos": 0}], "output_width": 2}`.

use std::fmt::Write;

use serde::Deserialize;
use tait_core::{Generator, GeneratorKind, MorphismWord, SliceError};

#[derive(Debug, thiserror::Error)]
pub enum WordFileError {
    #[error("ParseError: {0}")]
    Json(#[from] serde_json::Error),
    #[error("ParseError: unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error(transparent)]
    Word(#[from] SliceError),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Layer {
    gen: String,
    pos: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    input_width: usize,
    layers: Vec<Layer>,
    output_width: usize,
}

pub fn serialize_word(w: &MorphismWord) -> String {
    let mut out = format!("{{\"input_width\": {}, \"layers\": [", w.input_width());
    for (i, g) in w.layers().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write!(out, "{{\"gen\": \"{}\", \"pos\": {}}}", g.kind.name(), g.pos).unwrap();
    }
    write!(out, "], \"output_width\": {}}}", w.output_width()).unwrap();
    out
}

/// Accepts any JSON layout of the same fields; widths are checked.
pub fn parse_word(text: &str) -> Result<MorphismWord, WordFileError> {
    let doc: Doc = serde_json::from_str(text)?;
    let layers = doc
        .layers
        .into_iter()
        .map(|l| {
            GeneratorKind::from_name(&l.gen)
                .map(|kind| Generator { kind, pos: l.pos })
                .ok_or(WordFileError::UnknownGenerator(l.gen))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MorphismWord::with_output(doc.input_width, layers, doc.output_width)?)
}
