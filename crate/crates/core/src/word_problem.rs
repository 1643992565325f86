//! Equality of words in a finitely presented group as a bounded rewrite
//! search.
//!
//! Inserting a relator corresponds to gluing in a cup, deleting one to a
//! cap, and free insertion/deletion of `g g^-1` to the trivial bordisms.
//! A search that reaches the target returns every intermediate word, so the
//! result can be replayed independently. Not finding one proves nothing.
//!
//! Over the Klein four-group the product of the letters is invariant under
//! all of these moves, which gives a cheap obstruction.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::words::{free_reduce, k4_image, GroupPresentation, Letter, PresentationError, RelatorVariant, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    InsertRelator,
    DeleteRelator,
    FreeInsert,
    FreeDelete,
    /// Insert an arbitrary word (the pair of pants: multiplication).
    Concatenate,
    /// Remove a subword (the reversed pants: factorization).
    Factor,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::InsertRelator => "insert-relator",
            MoveKind::DeleteRelator => "delete-relator",
            MoveKind::FreeInsert => "free-insert",
            MoveKind::FreeDelete => "free-delete",
            MoveKind::Concatenate => "concatenate",
            MoveKind::Factor => "factor",
        }
    }

    fn inserts(self) -> bool {
        matches!(self, MoveKind::InsertRelator | MoveKind::FreeInsert | MoveKind::Concatenate)
    }
}

/// One rewrite: `payload` is inserted at, or removed from, `position`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteMove {
    pub kind: MoveKind,
    pub position: usize,
    /// Index of the relator used, for relator moves.
    pub relator: Option<usize>,
    pub payload: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("step {step}: {kind} at {position} does not fit the word")]
    OutOfRange { step: usize, kind: &'static str, position: usize },
    #[error("step {step}: removed letters differ from the recorded payload")]
    PayloadMismatch { step: usize },
    #[error("step {step}: payload is not a rotation of relator {relator} or of its inverse")]
    NotARelator { step: usize, relator: usize },
    #[error("step {step}: free move payload is not a cancelling pair")]
    NotACancellation { step: usize },
    #[error("step {step}: result differs from the recorded word")]
    WordMismatch { step: usize },
}

impl RewriteMove {
    fn relator_move(kind: MoveKind, position: usize, v: &RelatorVariant) -> Self {
        RewriteMove { kind, position, relator: Some(v.relator), payload: v.word.clone() }
    }

    fn free_delete(position: usize, w: &Word) -> Self {
        RewriteMove { kind: MoveKind::FreeDelete, position, relator: None, payload: w.subword(position, 2) }
    }

    /// Apply to `w`, checking positions and, for removals, that the letters
    /// removed are the recorded payload.
    pub fn apply(&self, w: &Word, step: usize) -> Result<Word, ReplayError> {
        let out_of_range = ReplayError::OutOfRange { step, kind: self.kind.name(), position: self.position };
        if self.kind.inserts() {
            if self.position > w.len() {
                return Err(out_of_range);
            }
            Ok(w.insert_at(self.position, &self.payload))
        } else {
            if self.position + self.payload.len() > w.len() {
                return Err(out_of_range);
            }
            if w.subword(self.position, self.payload.len()) != self.payload {
                return Err(ReplayError::PayloadMismatch { step });
            }
            Ok(w.remove_range(self.position, self.payload.len()))
        }
    }

    pub fn display<'a>(&'a self, result: &'a Word, names: &'a [String]) -> impl fmt::Display + 'a {
        StepDisplay { mv: self, result, names }
    }
}

struct StepDisplay<'a> {
    mv: &'a RewriteMove,
    result: &'a Word,
    names: &'a [String],
}

impl fmt::Display for StepDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.mv.kind.name(), self.mv.position)?;
        if let Some(r) = self.mv.relator {
            write!(f, " rel {r}")?;
        }
        write!(f, " -> {}", self.result.display(self.names))
    }
}

/// A chain of rewrites from `source`, each step recording the word it
/// produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismCertificate {
    pub source: Word,
    pub steps: Vec<(RewriteMove, Word)>,
}

impl CobordismCertificate {
    pub fn target(&self) -> &Word {
        self.steps.last().map(|(_, w)| w).unwrap_or(&self.source)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of relator insertions and deletions.
    pub fn relator_moves(&self) -> usize {
        self.steps.iter().filter(|(m, _)| matches!(m.kind, MoveKind::InsertRelator | MoveKind::DeleteRelator)).count()
    }

    /// Re-run every move from the source, checking that each one is legal
    /// in `p` and produces the recorded word. Returns the final word.
    pub fn replay(&self, p: &GroupPresentation) -> Result<Word, ReplayError> {
        let variants = p.relator_variants();
        let mut w = self.source.clone();
        for (step, (mv, recorded)) in self.steps.iter().enumerate() {
            match mv.kind {
                MoveKind::InsertRelator | MoveKind::DeleteRelator => {
                    let r = mv.relator.unwrap_or(usize::MAX);
                    if !variants.iter().any(|v| v.relator == r && v.word == mv.payload) {
                        return Err(ReplayError::NotARelator { step, relator: r });
                    }
                }
                MoveKind::FreeInsert | MoveKind::FreeDelete => {
                    let l = mv.payload.letters();
                    if l.len() != 2 || !l[0].cancels(l[1]) {
                        return Err(ReplayError::NotACancellation { step });
                    }
                }
                MoveKind::Concatenate | MoveKind::Factor => {}
            }
            w = mv.apply(&w, step)?;
            if &w != recorded {
                return Err(ReplayError::WordMismatch { step });
            }
        }
        Ok(w)
    }

    /// One line per step: `<move-kind>@<pos> [rel <idx>] -> <word>`.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (mv, w) in &self.steps {
            out.push_str(&alloc::format!("{}\n", mv.display(w, names)));
        }
        out
    }
}

/// Compare two words over `{a, b, c}` (generator indices `0, 1, 2`) in
/// the Klein four-group.
pub fn words_equal_k4(w1: &Word, w2: &Word) -> Result<bool, PresentationError> {
    let unknown = |w: &Word| {
        PresentationError::UnknownGenerator(alloc::format!(
            "generator index {} outside a, b, c",
            w.max_generator().unwrap_or(0)
        ))
    };
    let x = k4_image(w1).ok_or_else(|| unknown(w1))?;
    let y = k4_image(w2).ok_or_else(|| unknown(w2))?;
    Ok(x == y)
}

/// Free deletions taking `w` to its reduced form, always cancelling the
/// leftmost pair.
fn reduction_steps(w: &Word) -> Vec<(RewriteMove, Word)> {
    let mut steps = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = cur.first_cancellation() {
        let mv = RewriteMove::free_delete(i, &cur);
        cur = cur.remove_range(i, 2);
        steps.push((mv, cur.clone()));
    }
    steps
}

/// The reverse chain: free insertions rebuilding `w` from its reduced form.
fn expansion_steps(w: &Word) -> Vec<(RewriteMove, Word)> {
    let forward = reduction_steps(w);
    let mut words: Vec<Word> = Vec::with_capacity(forward.len() + 1);
    words.push(w.clone());
    words.extend(forward.iter().map(|(_, x)| x.clone()));
    let mut out = Vec::with_capacity(forward.len());
    for (i, (mv, _)) in forward.iter().enumerate().rev() {
        let ins = RewriteMove {
            kind: MoveKind::FreeInsert,
            position: mv.position,
            relator: None,
            payload: mv.payload.clone(),
        };
        out.push((ins, words[i].clone()));
    }
    out
}

type Steps = Vec<(RewriteMove, Word)>;

/// The default length cap: four times the longest of the two words and the
/// relators.
pub fn default_max_length(p: &GroupPresentation, w1: &Word, w2: &Word) -> usize {
    let longest = p.relators().iter().map(Word::len).max().unwrap_or(0);
    4 * w1.len().max(w2.len()).max(longest).max(1)
}

/// Breadth-first search over reduced words. One level is one relator
/// insertion or deletion followed by free reduction; insertions are tried
/// before deletions, relator variants in the outer loop and positions in
/// the inner one, so the result is deterministic. No intermediate word may
/// exceed `max_length` letters. `None` means the bounds were exhausted,
/// not that the words differ.
pub fn bounded_cobordism_search(
    p: &GroupPresentation,
    w1: &Word,
    w2: &Word,
    max_depth: usize,
    max_length: usize,
) -> Result<Option<CobordismCertificate>, PresentationError> {
    p.check_word(w1)?;
    p.check_word(w2)?;
    let start = free_reduce(w1);
    let goal = free_reduce(w2);
    let finish = |mut middle: Vec<(RewriteMove, Word)>| {
        let mut steps = reduction_steps(w1);
        steps.append(&mut middle);
        steps.extend(expansion_steps(w2));
        CobordismCertificate { source: w1.clone(), steps }
    };
    if start == goal {
        return Ok(Some(finish(Vec::new())));
    }
    if start.len() > max_length {
        return Ok(None);
    }

    let variants = p.relator_variants();
    // reduced word -> (parent, steps from parent)
    let mut parent: BTreeMap<Word, Option<(Word, Steps)>> = BTreeMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((w, depth)) = queue.pop_front() {
        if depth >= max_depth {
            continue;
        }
        let mut children: Vec<(RewriteMove, Word)> = Vec::new();
        if w.len() < max_length {
            for v in &variants {
                if w.len() + v.word.len() > max_length {
                    continue;
                }
                for pos in 0..=w.len() {
                    children
                        .push((RewriteMove::relator_move(MoveKind::InsertRelator, pos, v), w.insert_at(pos, &v.word)));
                }
            }
        }
        for v in &variants {
            let k = v.word.len();
            for pos in 0..(w.len() + 1).saturating_sub(k) {
                if w.letters()[pos..pos + k] == *v.word.letters() {
                    children.push((RewriteMove::relator_move(MoveKind::DeleteRelator, pos, v), w.remove_range(pos, k)));
                }
            }
        }
        for (mv, raw) in children {
            let mut steps = Vec::with_capacity(1);
            steps.push((mv, raw.clone()));
            steps.extend(reduction_steps(&raw));
            let reduced = steps.last().map(|(_, x)| x.clone()).expect("nonempty");
            if parent.contains_key(&reduced) {
                continue;
            }
            parent.insert(reduced.clone(), Some((w.clone(), steps)));
            if reduced == goal {
                let mut chain = Vec::new();
                let mut cur = reduced;
                while let Some(Some((prev, steps))) = parent.get(&cur) {
                    chain.push(steps.clone());
                    cur = prev.clone();
                }
                chain.reverse();
                return Ok(Some(finish(chain.into_iter().flatten().collect())));
            }
            queue.push_back((reduced, depth + 1));
        }
    }
    Ok(None)
}

/// Insert `g g^-1` at `position`.
pub fn free_insert(w: &Word, position: usize, g: Letter) -> (RewriteMove, Word) {
    let payload = Word::new(alloc::vec![g, g.inverse()]);
    let out = w.insert_at(position, &payload);
    (RewriteMove { kind: MoveKind::FreeInsert, position, relator: None, payload }, out)
}
