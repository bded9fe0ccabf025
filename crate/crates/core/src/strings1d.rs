//! One-dimensional primitives: smallest period, least rotation, LWpos and
//! Lyndon-word naming of periodic rows.
//!
//! A periodic row `s` with smallest period `p <= |s|/2` is summarized by the
//! triple (name, period, lwpos): the name identifies the Lyndon conjugate of
//! `s[..p]`, and `lwpos` is the first position in `s` where that Lyndon word
//! starts. Two rows share a name exactly when their periods are conjugate.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::{Fraction, Symbol};

/// Length of the smallest period of `s`, computed from the border array.
pub fn compute_period<T: Eq>(s: &[T]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::InvalidInput("cannot compute the period of an empty string".into()));
    }
    Ok(s.len() - longest_border(s))
}

/// Length of the longest proper border of `s` (KMP failure function at the end).
fn longest_border<T: Eq>(s: &[T]) -> usize {
    let mut fail = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail.last().copied().unwrap_or(0)
}

/// True when `s` is not a proper power of a shorter string.
pub fn is_primitive<T: Eq>(s: &[T]) -> bool {
    match compute_period(s) {
        Ok(p) => p == s.len() || !s.len().is_multiple_of(p),
        Err(_) => false,
    }
}

/// Index of the lexicographically least rotation, without the primitivity
/// check. For a proper power the smallest such index is returned.
fn least_rotation_index<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Least rotation of a primitive string: the offset `k` at which it starts
/// and the rotated word `s[k..] + s[..k]`, which is a Lyndon word.
pub fn least_rotation<T: Ord + Clone>(s: &[T]) -> Result<(usize, Vec<T>)> {
    if s.is_empty() {
        return Err(Error::InvalidInput("cannot rotate an empty string".into()));
    }
    if !is_primitive(s) {
        return Err(Error::NotPrimitive);
    }
    let k = least_rotation_index(s);
    let mut word = Vec::with_capacity(s.len());
    word.extend_from_slice(&s[k..]);
    word.extend_from_slice(&s[..k]);
    Ok((k, word))
}

pub fn is_lyndon<T: Ord>(s: &[T]) -> bool {
    !s.is_empty() && is_primitive(s) && least_rotation_index(s) == 0
}

/// Dense identifier of an interned Lyndon word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NameId(pub u32);

/// Bidirectional map between Lyndon words and dense ids.
#[derive(Debug, Clone)]
pub struct NameRegistry<T> {
    words: Vec<Vec<T>>,
    ids: HashMap<Vec<T>, NameId>,
}

impl<T> Default for NameRegistry<T> {
    fn default() -> Self {
        Self {
            words: Vec::new(),
            ids: HashMap::new(),
        }
    }
}

impl<T: Symbol> NameRegistry<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `word`, assigning the next dense id on first sight.
    pub fn intern(&mut self, word: &[T]) -> Result<NameId> {
        if let Some(&id) = self.ids.get(word) {
            return Ok(id);
        }
        if !is_lyndon(word) {
            return Err(Error::NotLyndon);
        }
        let id = NameId(self.words.len() as u32);
        self.words.push(word.to_vec());
        self.ids.insert(word.to_vec(), id);
        Ok(id)
    }

    /// Looks up a word without interning it.
    pub fn get(&self, word: &[T]) -> Option<NameId> {
        self.ids.get(word).copied()
    }

    pub fn word(&self, id: NameId) -> Option<&[T]> {
        self.words.get(id.0 as usize).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Per-row triple of Lyndon class name, period and LWpos, plus the width
/// of the row it summarizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowSummary {
    pub name: NameId,
    pub period: usize,
    pub lwpos: usize,
    pub width: usize,
}

/// Period and LWpos of a sufficiently periodic row. The Lyndon word of the
/// row is `s[lwpos..lwpos + period]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowShape {
    pub period: usize,
    pub lwpos: usize,
}

impl RowShape {
    pub fn lyndon_word<'a, T>(&self, s: &'a [T]) -> &'a [T] {
        &s[self.lwpos..self.lwpos + self.period]
    }
}

/// True when `period <= fraction * width`.
pub fn within_fraction(period: usize, width: usize, fraction: Fraction) -> bool {
    period as u128 * *fraction.denom() as u128 <= *fraction.numer() as u128 * width as u128
}

/// Computes period and LWpos without touching a registry.
pub fn row_shape<T: Ord>(s: &[T], max_period_fraction: Fraction) -> Result<RowShape> {
    let period = compute_period(s)?;
    if !within_fraction(period, s.len(), max_period_fraction) || 2 * period > s.len() {
        return Err(Error::NotSufficientlyPeriodic {
            row: None,
            period,
            width: s.len(),
        });
    }
    let lwpos = least_rotation_index(&s[..period]);
    Ok(RowShape { period, lwpos })
}

/// Summarizes a periodic row and interns the Lyndon word of its period.
pub fn summarize_row<T: Symbol>(
    s: &[T],
    registry: &mut NameRegistry<T>,
    max_period_fraction: Fraction,
) -> Result<RowSummary> {
    let shape = row_shape(s, max_period_fraction)?;
    let name = registry.intern(shape.lyndon_word(s))?;
    Ok(RowSummary {
        name,
        period: shape.period,
        lwpos: shape.lwpos,
        width: s.len(),
    })
}
