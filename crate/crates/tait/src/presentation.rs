//! Presentation files `a b c d | a b^-1 a c` and word arguments.
//!
//! Letters are generator names, optionally followed by `^-1`, separated
//! by whitespace. When every generator name is a single character a word
//! may also be written without spaces (`aca`, `ab^-1ac`). `1` or an empty
//! string is the identity.

use tait_core::{GroupPresentation, Letter, PresentationError, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationTextError {
    #[error("ParseError: {0}")]
    Syntax(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn syntax<T>(msg: String) -> Result<T, PresentationTextError> {
    Err(PresentationTextError::Syntax(msg))
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation, PresentationTextError> {
    let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join(" ");
    let Some((gens, rels)) = body.split_once('|') else {
        return syntax("expected `<generators> | <relators>`".into());
    };
    let generators: Vec<String> = gens.split_whitespace().map(String::from).collect();
    let relators = rels
        .split(',')
        .filter(|r| !r.trim().is_empty())
        .map(|r| parse_letters(&generators, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupPresentation::new(generators, relators)?)
}

pub fn parse_word(p: &GroupPresentation, text: &str) -> Result<Word, PresentationTextError> {
    parse_letters(p.generators(), text)
}

fn parse_letters(generators: &[String], text: &str) -> Result<Word, PresentationTextError> {
    let text = text.trim();
    if text.is_empty() || text == "1" {
        return Ok(Word::identity());
    }
    let lookup = |name: &str| generators.iter().position(|g| g == name);
    let compact = generators.iter().all(|g| g.chars().count() == 1);
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (name, inverse) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (tok, false),
        };
        if let Some(i) = lookup(name) {
            letters.push(if inverse { Letter::neg(i) } else { Letter::pos(i) });
            continue;
        }
        if !compact {
            return Err(PresentationError::UnknownGenerator(name.to_string()).into());
        }
        let mut rest = tok;
        while let Some(ch) = rest.chars().next() {
            let Some(i) = lookup(&rest[..ch.len_utf8()]) else {
                return Err(PresentationError::UnknownGenerator(ch.to_string()).into());
            };
            rest = &rest[ch.len_utf8()..];
            match rest.strip_prefix("^-1") {
                Some(r) => {
                    letters.push(Letter::neg(i));
                    rest = r;
                }
                None => letters.push(Letter::pos(i)),
            }
        }
    }
    Ok(Word::new(letters))
}
