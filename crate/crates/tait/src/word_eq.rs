//! Verdicts for `tait word-eq`.

use tait_core::words::k4_image;
use tait_core::{bounded_cobordism_search, CobordismCertificate, GroupPresentation, PresentationError, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal(CobordismCertificate),
    /// Only claimed when the presentation maps onto the Klein four-group
    /// letter for letter and the two images differ.
    Unequal,
    Unknown,
}

/// True when the generators are `a b c` and every relator is trivial in
/// the Klein four-group, so the product of letters is preserved by every
/// rewrite.
pub fn k4_obstruction_applies(p: &GroupPresentation) -> bool {
    p.generators() == ["a", "b", "c"] && p.relators().iter().all(|r| k4_image(r).is_some_and(|x| x.is_identity()))
}

pub fn decide(
    p: &GroupPresentation,
    w1: &Word,
    w2: &Word,
    max_depth: usize,
    max_length: usize,
) -> Result<Verdict, PresentationError> {
    if let Some(cert) = bounded_cobordism_search(p, w1, w2, max_depth, max_length)? {
        return Ok(Verdict::Equal(cert));
    }
    if k4_obstruction_applies(p) && k4_image(w1) != k4_image(w2) {
        return Ok(Verdict::Unequal);
    }
    Ok(Verdict::Unknown)
}
