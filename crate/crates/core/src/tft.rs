//! Sparse evaluation of words on edge-color states.
//!
//! A cross-section of width `n` carries the space spanned by color strings
//! of length `n` over `{a, b, c}`. The four generators act on basis strings
//! by 0/1 rules, so every coefficient stays a nonnegative integer:
//!
//! * cup inserts `xx`, summed over the three colors;
//! * cap keeps a string only if the two capped colors agree, and drops them;
//! * merge replaces two different colors by the third and kills equal ones;
//! * split replaces `x` by `yz + zy`, where `{x, y, z} = {a, b, c}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::k4::Color;
use crate::slicer::{Generator, GeneratorKind, MorphismWord};

pub type ColorString = Vec<Color>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("InvalidPosition: {kind} at {pos} on width {width}")]
    InvalidPosition { kind: &'static str, pos: usize, width: usize },
    #[error("WidthMismatch: expected width {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("NotClosed: word has widths {input} -> {output}")]
    NotClosed { input: usize, output: usize },
}

/// A vector on a cross-section, keyed by color string. Zero coefficients
/// are never stored, and iteration is in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVector {
    width: usize,
    terms: BTreeMap<ColorString, BigUint>,
}

impl StateVector {
    pub fn zero(width: usize) -> Self {
        StateVector { width, terms: BTreeMap::new() }
    }

    /// The width-0 state with coefficient 1 on the empty string.
    pub fn unit() -> Self {
        StateVector::basis(Vec::new())
    }

    pub fn basis(colors: ColorString) -> Self {
        let mut s = StateVector::zero(colors.len());
        s.terms.insert(colors, BigUint::one());
        s
    }

    /// Sum up terms; strings of the wrong length are a width mismatch.
    pub fn from_terms<I>(width: usize, terms: I) -> Result<Self, EvalError>
    where
        I: IntoIterator<Item = (ColorString, BigUint)>,
    {
        let mut s = StateVector::zero(width);
        for (k, v) in terms {
            if k.len() != width {
                return Err(EvalError::WidthMismatch { expected: width, found: k.len() });
            }
            s.add(k, v);
        }
        Ok(s)
    }

    fn add(&mut self, key: ColorString, v: BigUint) {
        if v.is_zero() {
            return;
        }
        *self.terms.entry(key).or_default() += v;
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of stored (nonzero) terms.
    pub fn support(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &[Color]) -> BigUint {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ColorString, &BigUint)> {
        self.terms.iter()
    }

    /// The coefficient of the empty string; zero unless the width is 0.
    pub fn scalar(&self) -> BigUint {
        self.get(&[])
    }
}

/// Every color string of the given length, in lexicographic order.
pub fn all_color_strings(width: usize) -> Vec<ColorString> {
    let mut out = vec![Vec::new()];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|s| {
                Color::ALL.into_iter().map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn apply_generator(s: &StateVector, gen: Generator) -> Result<StateVector, EvalError> {
    let width = gen.apply_width(s.width).ok_or(EvalError::InvalidPosition {
        kind: gen.kind.name(),
        pos: gen.pos,
        width: s.width,
    })?;
    let p = gen.pos;
    let mut out = StateVector::zero(width);
    for (key, v) in &s.terms {
        match gen.kind {
            GeneratorKind::Cup => {
                for x in Color::ALL {
                    let mut k = Vec::with_capacity(width);
                    k.extend_from_slice(&key[..p]);
                    k.extend([x, x]);
                    k.extend_from_slice(&key[p..]);
                    out.add(k, v.clone());
                }
            }
            GeneratorKind::Cap => {
                if key[p] == key[p + 1] {
                    let mut k = key.clone();
                    k.drain(p..p + 2);
                    out.add(k, v.clone());
                }
            }
            GeneratorKind::Merge => {
                if let Some(z) = key[p].third(key[p + 1]) {
                    let mut k = key.clone();
                    k.splice(p..p + 2, [z]);
                    out.add(k, v.clone());
                }
            }
            GeneratorKind::Split => {
                let (y, z) = key[p].others();
                for pair in [[y, z], [z, y]] {
                    let mut k = key.clone();
                    k.splice(p..p + 1, pair);
                    out.add(k, v.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Largest support and width met while evaluating.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalStats {
    pub peak_support: usize,
    pub peak_width: usize,
}

pub fn evaluate_state(w: &MorphismWord, input: &StateVector) -> Result<StateVector, EvalError> {
    evaluate_state_with_stats(w, input).map(|(s, _)| s)
}

pub fn evaluate_state_with_stats(w: &MorphismWord, input: &StateVector) -> Result<(StateVector, EvalStats), EvalError> {
    if input.width != w.input_width() {
        return Err(EvalError::WidthMismatch { expected: w.input_width(), found: input.width });
    }
    let mut stats = EvalStats { peak_support: input.support(), peak_width: input.width };
    let mut s = input.clone();
    for &g in w.layers() {
        s = apply_generator(&s, g)?;
        stats.peak_support = stats.peak_support.max(s.support());
        stats.peak_width = stats.peak_width.max(s.width);
    }
    Ok((s, stats))
}

/// The number the word assigns to the empty cross-section.
pub fn evaluate_closed(w: &MorphismWord) -> Result<BigUint, EvalError> {
    evaluate_closed_with_stats(w).map(|(v, _)| v)
}

pub fn evaluate_closed_with_stats(w: &MorphismWord) -> Result<(BigUint, EvalStats), EvalError> {
    if !w.is_closed() {
        return Err(EvalError::NotClosed { input: w.input_width(), output: w.output_width() });
    }
    let (s, stats) = evaluate_state_with_stats(w, &StateVector::unit())?;
    Ok((s.scalar(), stats))
}

/// Sparse integer matrix with rows indexed by output color strings and
/// columns by input color strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountMatrix {
    input_width: usize,
    output_width: usize,
    entries: BTreeMap<(ColorString, ColorString), BigUint>,
}

impl CountMatrix {
    pub fn zero(input_width: usize, output_width: usize) -> Self {
        CountMatrix { input_width, output_width, entries: BTreeMap::new() }
    }

    pub fn identity(width: usize) -> Self {
        let mut m = CountMatrix::zero(width, width);
        for s in all_color_strings(width) {
            m.entries.insert((s.clone(), s), BigUint::one());
        }
        m
    }

    /// Assemble from the image of every input basis string.
    pub fn from_columns<I>(input_width: usize, output_width: usize, columns: I) -> Self
    where
        I: IntoIterator<Item = (ColorString, StateVector)>,
    {
        let mut m = CountMatrix::zero(input_width, output_width);
        for (col, state) in columns {
            for (row, v) in state.terms {
                m.add(row, col.clone(), v);
            }
        }
        m
    }

    pub fn add(&mut self, row: ColorString, col: ColorString, v: BigUint) {
        if v.is_zero() {
            return;
        }
        *self.entries.entry((row, col)).or_default() += v;
    }

    pub fn input_width(&self) -> usize {
        self.input_width
    }

    pub fn output_width(&self) -> usize {
        self.output_width
    }

    pub fn get(&self, row: &[Color], col: &[Color]) -> BigUint {
        self.entries.get(&(row.to_vec(), col.to_vec())).cloned().unwrap_or_default()
    }

    /// Nonzero entries `(row, column, value)` ordered by row, then column.
    pub fn entries(&self) -> impl Iterator<Item = (&ColorString, &ColorString, &BigUint)> {
        self.entries.iter().map(|((r, c), v)| (r, c, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// The matrix of `self` followed by `next`, i.e. `next · self`.
    pub fn then(&self, next: &CountMatrix) -> Result<CountMatrix, EvalError> {
        if self.output_width != next.input_width {
            return Err(EvalError::WidthMismatch { expected: next.input_width, found: self.output_width });
        }
        let mut by_col: BTreeMap<&ColorString, Vec<(&ColorString, &BigUint)>> = BTreeMap::new();
        for ((r, c), v) in &next.entries {
            by_col.entry(c).or_default().push((r, v));
        }
        let mut out = CountMatrix::zero(self.input_width, next.output_width);
        for ((mid, col), v) in &self.entries {
            if let Some(rows) = by_col.get(mid) {
                for (row, u) in rows {
                    out.add((*row).clone(), col.clone(), v * *u);
                }
            }
        }
        Ok(out)
    }
}

/// The matrix of a word, one column per input basis string.
pub fn evaluate_matrix(w: &MorphismWord) -> Result<CountMatrix, EvalError> {
    let mut columns = Vec::new();
    for col in all_color_strings(w.input_width()) {
        let image = evaluate_state(w, &StateVector::basis(col.clone()))?;
        columns.push((col, image));
    }
    Ok(CountMatrix::from_columns(w.input_width(), w.output_width(), columns))
}
