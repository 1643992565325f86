//! Plain-text forms of color strings, state vectors, count matrices and
//! coloring lists. The empty color string is written `-`.

use std::fmt::Write;

use num_bigint::BigUint;
use tait_core::{Color, CountMatrix, StateVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ParseError: line {line}: {msg}")]
pub struct TextError {
    pub line: usize,
    pub msg: String,
}

pub fn color_string(cs: &[Color]) -> String {
    if cs.is_empty() {
        "-".into()
    } else {
        cs.iter().map(|c| c.symbol()).collect()
    }
}

pub fn parse_color_string(s: &str) -> Option<Vec<Color>> {
    if s == "-" {
        return Some(Vec::new());
    }
    s.chars().map(Color::from_symbol).collect()
}

/// `<colorstring> <coefficient>` per nonzero term, lexicographic.
pub fn state_lines(s: &StateVector) -> String {
    let mut out = String::new();
    for (k, v) in s.terms() {
        writeln!(out, "{} {v}", color_string(k)).unwrap();
    }
    out
}

/// Parses the output of [`state_lines`]; `width` fixes the width of an
/// empty (zero) state.
pub fn parse_state(text: &str, width: usize) -> Result<StateVector, TextError> {
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |msg: String| TextError { line: i + 1, msg };
        let body = raw.trim();
        if body.is_empty() {
            continue;
        }
        let (k, v) = body.split_once(char::is_whitespace).ok_or_else(|| err("expected `<colors> <count>`".into()))?;
        let k = parse_color_string(k).ok_or_else(|| err(format!("bad color string `{k}`")))?;
        let v: BigUint = v.trim().parse().map_err(|_| err(format!("bad coefficient `{}`", v.trim())))?;
        terms.push((k, v));
    }
    StateVector::from_terms(width, terms).map_err(|e| TextError { line: 0, msg: e.to_string() })
}

/// `<output> <input> <count>` per nonzero entry, by output then input.
pub fn matrix_triples(m: &CountMatrix) -> String {
    let mut out = String::new();
    for (r, c, v) in m.entries() {
        writeln!(out, "{} {} {v}", color_string(r), color_string(c)).unwrap();
    }
    out
}

pub fn parse_matrix(text: &str, input_width: usize, output_width: usize) -> Result<CountMatrix, TextError> {
    let mut m = CountMatrix::zero(input_width, output_width);
    for (i, raw) in text.lines().enumerate() {
        let err = |msg: String| TextError { line: i + 1, msg };
        let parts: Vec<&str> = raw.split_whitespace().collect();
        if parts.is_empty() {
            continue;
        }
        let &[r, c, v] = parts.as_slice() else {
            return Err(err("expected `<output> <input> <count>`".into()));
        };
        let r =
            parse_color_string(r).filter(|r| r.len() == output_width).ok_or_else(|| err(format!("bad row `{r}`")))?;
        let c =
            parse_color_string(c).filter(|c| c.len() == input_width).ok_or_else(|| err(format!("bad column `{c}`")))?;
        let v: BigUint = v.parse().map_err(|_| err(format!("bad count `{v}`")))?;
        m.add(r, c, v);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tait_core::{evaluate_matrix, evaluate_state, Generator, MorphismWord};

    #[test]
    fn theta_cup_half() {
        let w = MorphismWord::new(0, vec![Generator::cup(0), Generator::split(0), Generator::merge(0)]).unwrap();
        let s = evaluate_state(&w, &StateVector::unit()).unwrap();
        assert_eq!(state_lines(&s), "aa 2\nbb 2\ncc 2\n");
        assert_eq!(parse_state(&state_lines(&s), 2).unwrap(), s);
    }

    #[test]
    fn scalar_state_uses_dash() {
        let s = StateVector::from_terms(0, [(vec![], BigUint::from(6u32))]).unwrap();
        assert_eq!(state_lines(&s), "- 6\n");
        assert_eq!(parse_state("- 6\n", 0).unwrap(), s);
    }

    #[test]
    fn zero_state_is_empty_text() {
        assert_eq!(state_lines(&StateVector::zero(2)), "");
        assert_eq!(parse_state("", 2).unwrap(), StateVector::zero(2));
    }

    #[test]
    fn merge_matrix_triples() {
        let m = evaluate_matrix(&MorphismWord::new(2, vec![Generator::merge(0)]).unwrap()).unwrap();
        assert_eq!(matrix_triples(&m), "a bc 1\na cb 1\nb ac 1\nb ca 1\nc ab 1\nc ba 1\n");
        assert_eq!(parse_matrix(&matrix_triples(&m), 2, 1).unwrap(), m);
    }

    #[test]
    fn bad_text() {
        assert_eq!(parse_state("ab 1\nax 2\n", 2).unwrap_err().line, 2);
        assert!(parse_matrix("a bc\n", 2, 1).is_err());
        assert!(parse_matrix("a b 1\n", 2, 1).is_err());
    }
}
