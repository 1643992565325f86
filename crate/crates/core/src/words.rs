//! Free words over a finite generating set and finite group presentations.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::k4::K4Element;

/// A generator raised to the power `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub const fn new(generator: usize, exponent: i8) -> Self {
        Letter { generator, exponent }
    }

    pub const fn pos(generator: usize) -> Self {
        Letter { generator, exponent: 1 }
    }

    pub const fn neg(generator: usize) -> Self {
        Letter { generator, exponent: -1 }
    }

    pub const fn inverse(self) -> Self {
        Letter { generator: self.generator, exponent: -self.exponent }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.exponent == -other.exponent
    }
}

/// A word in the generators; the empty word is the identity.
///
/// Exponents are stored explicitly even for involutive generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Insert `other` so that it starts at letter index `pos`.
    pub fn insert_at(&self, pos: usize, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&other.0);
        v.extend_from_slice(&self.0[pos..]);
        Word(v)
    }

    /// Remove `len` letters starting at `pos`.
    pub fn remove_range(&self, pos: usize, len: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() - len);
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    pub fn subword(&self, pos: usize, len: usize) -> Word {
        Word(self.0[pos..pos + len].to_vec())
    }

    /// Index of the first adjacent cancelling pair, if any.
    pub fn first_cancellation(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0].cancels(w[1]))
    }

    pub fn is_reduced(&self) -> bool {
        self.first_cancellation().is_none()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Render with generator names, `g` or `g^-1` tokens separated by
    /// spaces; the empty word renders as `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match self.names.get(l.generator) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{}", l.generator)?,
            }
            if l.exponent < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Delete adjacent `g g^-1` pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("InvalidPresentation: {0}")]
    Invalid(String),
    #[error("UnknownGenerator: {0}")]
    UnknownGenerator(String),
}

/// A finite presentation `<generators | relators>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() {
                return Err(PresentationError::Invalid("empty generator name".to_string()));
            }
            if generators[..i].contains(g) {
                return Err(PresentationError::Invalid(alloc::format!("duplicate generator {g}")));
            }
        }
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= generators.len() {
                    return Err(PresentationError::UnknownGenerator(alloc::format!("generator index {m} in relator")));
                }
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// `<a, b, c | a a, b b, c c, a b c>`.
    pub fn k4() -> Self {
        let (a, b, c) = (Letter::pos(0), Letter::pos(1), Letter::pos(2));
        GroupPresentation {
            generators: ["a", "b", "c"].iter().map(|s| s.to_string()).collect(),
            relators: alloc::vec![
                Word::new(alloc::vec![a, a]),
                Word::new(alloc::vec![b, b]),
                Word::new(alloc::vec![c, c]),
                Word::new(alloc::vec![a, b, c]),
            ],
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), PresentationError> {
        match w.max_generator() {
            Some(m) if m >= self.generators.len() => {
                Err(PresentationError::UnknownGenerator(alloc::format!("generator index {m}")))
            }
            _ => Ok(()),
        }
    }

    /// Every cyclic rotation of every relator and of its inverse, in the
    /// order: relator 0 rotations, relator 0 inverse rotations, relator 1, ...
    /// Duplicate words are kept once.
    pub fn relator_variants(&self) -> Vec<RelatorVariant> {
        let mut out: Vec<RelatorVariant> = Vec::new();
        for (index, r) in self.relators.iter().enumerate() {
            for inverted in [false, true] {
                let base = if inverted { r.inverse() } else { r.clone() };
                for rotation in 0..r.len().max(1) {
                    let word = base.rotate(rotation);
                    if out.iter().any(|v| v.word == word) {
                        continue;
                    }
                    out.push(RelatorVariant { relator: index, rotation, inverted, word });
                }
            }
        }
        out
    }
}

/// A relator read from another base point and/or in reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorVariant {
    pub relator: usize,
    pub rotation: usize,
    pub inverted: bool,
    pub word: Word,
}

/// Image of a word over `{a, b, c}` in `K4`, with generator indices `0, 1, 2`.
pub fn k4_image(w: &Word) -> Option<K4Element> {
    let mut acc = K4Element::ONE;
    for l in w.letters() {
        let g = match l.generator {
            0 => K4Element::A,
            1 => K4Element::B,
            2 => K4Element::C,
            _ => return None,
        };
        acc = acc * g;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn w(spec: &[(usize, i8)]) -> Word {
        spec.iter().map(|&(g, e)| Letter::new(g, e)).collect()
    }

    #[test]
    fn single_cancellation() {
        let g = w(&[(1, 1), (2, 1), (2, -1), (3, 1)]);
        assert_eq!(free_reduce(&g), w(&[(1, 1), (3, 1)]));
    }

    #[test]
    fn empty_stays_empty() {
        assert_eq!(free_reduce(&Word::identity()), Word::identity());
    }

    #[test]
    fn alternating_pairs_vanish() {
        let g = w(&[(1, 1), (1, -1), (1, 1), (1, -1)]);
        assert!(free_reduce(&g).is_empty());
    }

    #[test]
    fn nested_cancellation() {
        let g = w(&[(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(free_reduce(&g), w(&[(2, 1)]));
    }

    #[test]
    fn presentation_validation() {
        let names = vec!["a".to_string(), "a".to_string()];
        assert!(GroupPresentation::new(names, vec![]).is_err());
        let names = vec!["a".to_string()];
        assert!(matches!(
            GroupPresentation::new(names, vec![w(&[(1, 1)])]),
            Err(PresentationError::UnknownGenerator(_))
        ));
        assert!(GroupPresentation::new(vec![String::new()], vec![]).is_err());
    }

    #[test]
    fn relator_variants_include_inverse_rotations() {
        // <a,b,c,d | a b^-1 a c>
        let names = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let p = GroupPresentation::new(names, vec![w(&[(0, 1), (1, -1), (0, 1), (2, 1)])]).unwrap();
        let vars = p.relator_variants();
        assert_eq!(vars.len(), 8);
        let target = w(&[(2, -1), (0, -1), (1, 1), (0, -1)]);
        assert!(vars.iter().any(|v| v.word == target && v.inverted));
    }

    #[test]
    fn k4_variants_deduplicate_squares() {
        let vars = GroupPresentation::k4().relator_variants();
        // a a, a^-1 a^-1, same for b and c, then 3 rotations of abc and of its inverse
        assert_eq!(vars.len(), 6 + 6);
    }

    #[test]
    fn display_uses_names() {
        let p = GroupPresentation::k4();
        let g = w(&[(0, 1), (2, -1)]);
        assert_eq!(alloc::format!("{}", g.display(p.generators())), "a c^-1");
        assert_eq!(alloc::format!("{}", Word::identity().display(p.generators())), "1");
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..3, prop_oneof![Just(1i8), Just(-1i8)]), 0..16)
            .prop_map(|v| v.into_iter().map(|(g, e)| Letter::new(g, e)).collect())
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(g in word_strategy()) {
            let once = free_reduce(&g);
            prop_assert!(once.is_reduced());
            prop_assert_eq!(free_reduce(&once), once);
        }

        #[test]
        fn inverse_cancels(g in word_strategy()) {
            prop_assert!(free_reduce(&g.concat(&g.inverse())).is_empty());
        }

        #[test]
        fn pairwise_deletion_reaches_the_same_form(g in word_strategy()) {
            let mut cur = g.clone();
            while let Some(i) = cur.first_cancellation() {
                cur = cur.remove_range(i, 2);
            }
            prop_assert_eq!(cur, free_reduce(&g));
        }
    }
}
