use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{DictionaryIndex, Occurrence, PatternGroup};
use crate::lw2d::{sub_mod, ModularLyndon, SummaryColumn};
use crate::strings1d::{row_shape, within_fraction, NameId};
use crate::{Symbol, HALF};

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Process column windows on the rayon thread pool.
    pub parallel: bool,
}

/// Occurrences plus counters gathered while searching.
#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    pub occurrences: BTreeSet<Occurrence>,
    pub windows: usize,
    /// Candidate top rows handed to verification.
    pub candidates: usize,
    /// Arithmetic operations spent in verification, over all candidates.
    pub verify_ops: u64,
    /// Largest operation count of a single candidate.
    pub max_candidate_ops: u64,
}

impl SearchOutcome {
    fn merge(mut self, other: SearchOutcome) -> SearchOutcome {
        self.occurrences.extend(other.occurrences);
        self.windows += other.windows;
        self.candidates += other.candidates;
        self.verify_ops += other.verify_ops;
        self.max_candidate_ops = self.max_candidate_ops.max(other.max_candidate_ops);
        self
    }
}

/// Arithmetic verification of one candidate: the `m` window rows starting
/// at a row whose names spell `group.name_seq`.
///
/// Returns `(pattern, s)` for every pattern occurring at column `s` of the
/// window, `0 <= s <= window_width - m`.
pub fn verify_candidate(window: &SummaryColumn, group: &PatternGroup, window_width: usize) -> Vec<(usize, usize)> {
    let mut ops = 0;
    verify_candidate_counted(window, group, window_width, &mut ops)
}

/// [`verify_candidate`] that adds the number of arithmetic operations and
/// lookups it performs to `ops`.
pub fn verify_candidate_counted(
    window: &SummaryColumn,
    group: &PatternGroup,
    window_width: usize,
    ops: &mut u64,
) -> Vec<(usize, usize)> {
    let m = group.m;
    let r = group.r;
    debug_assert_eq!(window.periods, group.periods);
    if window_width < m {
        return Vec::new();
    }
    let max_shift = (window_width - m) as u64;

    // step 1: 2D Lyndon word of the first r rows
    let mut state = ModularLyndon::with_capacity(r);
    for i in 0..r {
        state.push(window.periods[i], window.lwpos[i]).expect("window rows are valid");
    }
    *ops += state.ops() + 1;
    let Some(sub) = group.subgroups.get(state.offsets()) else {
        return Vec::new();
    };
    let z_t = state.z_u64().expect("z_r < LCM_r");
    let lcm_r = group.lcm_r();

    let mut found = Vec::new();
    if group.is_small_lcm() {
        // every row is among the first r; all shifts congruent to z_t - z_p fit
        for entry in sub.entries.values().flatten() {
            let mut s = (z_t + lcm_r - entry.z_r) % lcm_r;
            *ops += 1;
            while s <= max_shift {
                found.push((entry.pattern, s as usize));
                s += lcm_r;
                *ops += 1;
            }
        }
        return found;
    }

    // steps 2-4 for w = 0 and w = LCM_r
    for w in [0, lcm_r] {
        let col = z_t + w;
        let shifted: Vec<usize> = (r..m)
            .map(|i| {
                let p = window.periods[i];
                sub_mod(window.lwpos[i], (col % p as u64) as usize, p)
            })
            .collect();
        *ops += (m - r) as u64 + 1;
        let Some(entries) = sub.entries.get(&shifted) else {
            continue;
        };
        for entry in entries {
            *ops += 1;
            if col < entry.z_r {
                continue;
            }
            let s = col - entry.z_r;
            if s <= max_shift {
                assert!(
                    !found.iter().any(|&(p, _)| p == entry.pattern),
                    "two values of w admitted pattern {}",
                    entry.pattern
                );
                found.push((entry.pattern, s as usize));
            }
        }
    }
    found
}

/// Start columns of the windows covering a text of width `n2`.
fn window_starts(n2: usize, m: usize) -> impl Iterator<Item = usize> {
    let half = (m / 2).max(1);
    (0..).step_by(half).take_while(move |s| s + m <= n2)
}

fn search_window<T: Symbol, R: AsRef<[T]>>(
    text: &[R],
    index: &DictionaryIndex<T>,
    start: usize,
) -> SearchOutcome {
    let m = index.m;
    let half = (m / 2).max(1);
    let n2 = text[0].as_ref().len();
    let width = (m + half).min(n2 - start);

    let mut periods = Vec::with_capacity(text.len());
    let mut lwpos = Vec::with_capacity(text.len());
    let names: Vec<Option<NameId>> = text
        .iter()
        .map(|row| {
            let slice = &row.as_ref()[start..start + width];
            let shape = row_shape(slice, HALF)
                .ok()
                .filter(|s| within_fraction(s.period, m, index.fraction));
            periods.push(shape.map_or(0, |s| s.period));
            lwpos.push(shape.map_or(0, |s| s.lwpos));
            shape.and_then(|s| index.registry.get(s.lyndon_word(slice)))
        })
        .collect();

    let mut out = SearchOutcome {
        windows: 1,
        ..Default::default()
    };
    for (g, top) in index.automaton.find_all(&names) {
        let group = &index.groups[g];
        let window = SummaryColumn {
            periods: periods[top..top + m].to_vec(),
            lwpos: lwpos[top..top + m].to_vec(),
            names: Vec::new(),
        };
        let mut ops = 0;
        let hits = verify_candidate_counted(&window, group, width, &mut ops);
        out.candidates += 1;
        out.verify_ops += ops;
        out.max_candidate_ops = out.max_candidate_ops.max(ops);
        out.occurrences.extend(hits.into_iter().map(|(pattern, s)| Occurrence {
            pattern,
            row: top,
            col: start + s,
        }));
    }
    out
}

/// Searches `text` with counters and options.
///
/// Complete when every text row that meets an occurrence is periodic with
/// period at most `m/4` across each window it falls in; otherwise
/// occurrences may be missed. Reported occurrences are always real.
///
/// # Panics
/// If the rows of `text` differ in length.
pub fn search_text_with<T: Symbol, R: AsRef<[T]> + Sync>(
    text: &[R],
    index: &DictionaryIndex<T>,
    options: SearchOptions,
) -> SearchOutcome {
    let Some(first) = text.first() else {
        return SearchOutcome::default();
    };
    let n2 = first.as_ref().len();
    assert!(
        text.iter().all(|r| r.as_ref().len() == n2),
        "text rows must have equal length"
    );
    if text.len() < index.m || n2 < index.m {
        return SearchOutcome::default();
    }
    let starts: Vec<usize> = window_starts(n2, index.m).collect();
    if options.parallel {
        starts
            .par_iter()
            .map(|&s| search_window(text, index, s))
            .reduce(SearchOutcome::default, SearchOutcome::merge)
    } else {
        starts
            .iter()
            .map(|&s| search_window(text, index, s))
            .fold(SearchOutcome::default(), SearchOutcome::merge)
    }
}

/// All occurrences of dictionary patterns in `text`.
pub fn search_text<T: Symbol, R: AsRef<[T]> + Sync>(text: &[R], index: &DictionaryIndex<T>) -> BTreeSet<Occurrence> {
    search_text_with(text, index, SearchOptions::default()).occurrences
}

/// Compares every pattern against every text position character by character.
pub fn brute_search<T: Eq, R: AsRef<[T]>, P: AsRef<[Q]>, Q: AsRef<[T]>>(text: &[R], patterns: &[P]) -> BTreeSet<Occurrence> {
    let mut out = BTreeSet::new();
    let n1 = text.len();
    let n2 = text.first().map_or(0, |r| r.as_ref().len());
    for (id, pattern) in patterns.iter().enumerate() {
        let rows = pattern.as_ref();
        let m1 = rows.len();
        let m2 = rows.first().map_or(0, |r| r.as_ref().len());
        if m1 == 0 || m1 > n1 || m2 > n2 {
            continue;
        }
        for i in 0..=n1 - m1 {
            for j in 0..=n2 - m2 {
                let hit = rows
                    .iter()
                    .enumerate()
                    .all(|(k, prow)| &text[i + k].as_ref()[j..j + m2] == prow.as_ref());
                if hit {
                    out.insert(Occurrence { pattern: id, row: i, col: j });
                }
            }
        }
    }
    out
}
