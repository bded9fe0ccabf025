//! 2D dictionary matching for square patterns whose rows are highly periodic.
//!
//! Preprocessing names every pattern row and groups patterns by their
//! vertical sequence of names. Within a group all patterns share the row
//! periods, so they share `r`, the first row where the running LCM exceeds
//! `m`. Each pattern is indexed by its 2D Lyndon word over rows `1..=r`
//! and by its LWpos array for the remaining rows, shifted to the column
//! `z_p[r]`.
//!
//! The text is scanned in column windows of width `3m/2`. Rows of a window
//! are named over the whole window, an automaton finds vertical runs of
//! names equal to some group's sequence, and each candidate is verified
//! arithmetically without comparing characters.

mod automaton;
mod search;

pub use automaton::VerticalMatcher;
pub use search::{
    brute_search, search_text, search_text_with, verify_candidate, verify_candidate_counted,
    SearchOptions, SearchOutcome,
};

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lw2d::{lcm_prefixes, sub_mod, ModularLyndon};
use crate::strings1d::{summarize_row, NameId, NameRegistry, RowSummary};
use crate::{Fraction, Symbol, QUARTER};

/// Top-left corner of a pattern occurrence in the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Occurrence {
    pub pattern: usize,
    pub row: usize,
    pub col: usize,
}

impl Ord for Occurrence {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.row, self.col, self.pattern).cmp(&(other.row, other.col, other.pattern))
    }
}

impl PartialOrd for Occurrence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A pattern as stored in a subgroup: its id and the column `z_p[r]` of
/// the 2D Lyndon word of its first `r` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternEntry {
    pub pattern: usize,
    pub z_r: u64,
}

/// Patterns sharing `2D_LW[1..=r]`, keyed by their LWpos arrays for rows
/// `r+1..=m` shifted to `z_p[r]`.
#[derive(Debug, Clone, Default)]
pub struct Subgroup {
    pub entries: HashMap<Vec<usize>, Vec<PatternEntry>>,
}

/// Patterns with the same vertical sequence of row names.
#[derive(Debug, Clone)]
pub struct PatternGroup {
    pub name_seq: Vec<NameId>,
    pub periods: Vec<usize>,
    /// Smallest 1-based row count whose LCM exceeds `m`, or `m`.
    pub r: usize,
    /// `LCM[1..=r]`.
    pub lcm_prefix_r: Vec<BigUint>,
    pub m: usize,
    pub subgroups: HashMap<Vec<usize>, Subgroup>,
}

impl PatternGroup {
    fn new(name_seq: Vec<NameId>, periods: Vec<usize>, m: usize) -> Self {
        let prefix = lcm_prefixes(&periods);
        let r = prefix
            .iter()
            .position(|l| *l > BigUint::from(m))
            .map_or(m, |i| i + 1);
        Self {
            name_seq,
            periods,
            r,
            lcm_prefix_r: prefix[..r].to_vec(),
            m,
            subgroups: HashMap::new(),
        }
    }

    /// `LCM_r` as a machine word. It is at most `m * m/4`.
    pub fn lcm_r(&self) -> u64 {
        self.lcm_prefix_r[self.r - 1].to_u64().expect("LCM_r is at most m^2")
    }

    /// True when the LCM of all rows is at most `m`; then rows `1..=r` are
    /// all the rows and several shifts of one pattern fit in a window.
    pub fn is_small_lcm(&self) -> bool {
        self.lcm_r() <= self.m as u64
    }

    pub fn pattern_count(&self) -> usize {
        self.subgroups
            .values()
            .flat_map(|s| s.entries.values())
            .map(Vec::len)
            .sum()
    }

    fn insert(&mut self, pattern: usize, rows: &[RowSummary]) {
        let mut state = ModularLyndon::with_capacity(self.r);
        for row in &rows[..self.r] {
            state.push(row.period, row.lwpos).expect("validated summary");
        }
        let z_r = state.z_u64().expect("z_r < LCM_r");
        let shifted: Vec<usize> = rows[self.r..]
            .iter()
            .map(|row| sub_mod(row.lwpos, (z_r % row.period as u64) as usize, row.period))
            .collect();
        self.subgroups
            .entry(state.offsets().to_vec())
            .or_default()
            .entries
            .entry(shifted)
            .or_default()
            .push(PatternEntry { pattern, z_r });
    }
}

/// Preprocessed dictionary of `d` patterns of size `m x m`.
#[derive(Debug, Clone)]
pub struct DictionaryIndex<T> {
    pub registry: NameRegistry<T>,
    pub automaton: VerticalMatcher,
    /// Indexed by automaton keyword.
    pub groups: Vec<PatternGroup>,
    pub m: usize,
    pub d: usize,
    /// Period bound applied to pattern rows and to window rows.
    pub fraction: Fraction,
}

impl<T: Symbol> DictionaryIndex<T> {
    /// Indexes patterns whose rows have periods of at most `m/4`.
    pub fn build<P, R>(patterns: &[P]) -> Result<Self>
    where
        P: AsRef<[R]>,
        R: AsRef<[T]>,
    {
        Self::build_with_fraction(patterns, QUARTER)
    }

    /// Like [`DictionaryIndex::build`] with a custom period bound (at most 1/2).
    pub fn build_with_fraction<P, R>(patterns: &[P], fraction: Fraction) -> Result<Self>
    where
        P: AsRef<[R]>,
        R: AsRef<[T]>,
    {
        let first = patterns
            .first()
            .ok_or_else(|| Error::InvalidInput("dictionary has no patterns".into()))?;
        let m = first.as_ref().len();
        if m == 0 {
            return Err(Error::InvalidInput("patterns must be non-empty".into()));
        }

        let mut registry = NameRegistry::new();
        let mut groups: Vec<PatternGroup> = Vec::new();
        let mut group_of: HashMap<Vec<NameId>, usize> = HashMap::new();

        for (id, pattern) in patterns.iter().enumerate() {
            let rows = pattern.as_ref();
            if rows.len() != m || rows.iter().any(|r| r.as_ref().len() != m) {
                return Err(Error::InvalidInput(format!(
                    "pattern {id} is not {m}x{m}"
                )));
            }
            let mut summaries = Vec::with_capacity(m);
            for (i, row) in rows.iter().enumerate() {
                let s = summarize_row(row.as_ref(), &mut registry, fraction).map_err(|e| e.at_row(i))?;
                summaries.push(s);
            }
            let name_seq: Vec<NameId> = summaries.iter().map(|s| s.name).collect();
            let g = *group_of.entry(name_seq.clone()).or_insert_with(|| {
                groups.push(PatternGroup::new(
                    name_seq,
                    summaries.iter().map(|s| s.period).collect(),
                    m,
                ));
                groups.len() - 1
            });
            groups[g].insert(id, &summaries);
        }

        let keywords: Vec<Vec<NameId>> = groups.iter().map(|g| g.name_seq.clone()).collect();
        Ok(Self {
            registry,
            automaton: VerticalMatcher::new(&keywords),
            groups,
            m,
            d: patterns.len(),
            fraction,
        })
    }
}

/// Builds a dictionary index with the default `m/4` period bound.
pub fn build_index<T: Symbol, P: AsRef<[R]>, R: AsRef<[T]>>(patterns: &[P]) -> Result<DictionaryIndex<T>> {
    DictionaryIndex::build(patterns)
}
