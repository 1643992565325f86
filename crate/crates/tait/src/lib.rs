//! File formats, parallel drivers and the verification battery for the
//! `tait` command-line tool. The algorithms live in `tait-core`.

pub mod bench;
pub mod graph_file;
pub mod parallel;
pub mod presentation;
pub mod text;
pub mod verify;
pub mod word_eq;
pub mod word_json;

pub use graph_file::{parse_graph, serialize_graph, GraphFileError, ParseError};
pub use presentation::{parse_presentation, PresentationTextError};
pub use word_json::{parse_word, serialize_word, WordFileError};
