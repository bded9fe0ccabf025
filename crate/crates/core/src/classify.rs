//! Horizontal 2D conjugacy classes of LCM-matrices and overlap queries.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lw2d::{alg2_2dlw, SummaryColumn};
use crate::strings1d::{summarize_row, NameId, NameRegistry};
use crate::{Fraction, Symbol, QUARTER};

/// Identity of a class: the row names plus the 2D Lyndon word offsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixClassKey {
    pub names: Vec<NameId>,
    pub offsets: Vec<usize>,
}

impl MatrixClassKey {
    /// 64-bit digest for bucketing. Equal keys have equal digests; equal
    /// digests still need a full comparison.
    pub fn digest(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.hash(&mut h);
        h.finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedMatrix {
    pub key: MatrixClassKey,
    /// Column of the LCM-matrix where the 2D Lyndon word starts.
    pub z: BigUint,
    /// `LCM_m`.
    pub lcm: BigUint,
    pub rows: usize,
    pub width: usize,
    pub periods: Vec<usize>,
    pub lwpos: Vec<usize>,
    /// Period bound the rows were checked against.
    pub fraction: Fraction,
}

/// Names every row and computes the 2D Lyndon word of the LCM-matrix.
pub fn classify_matrix<T: Symbol, R: AsRef<[T]>>(
    rows: &[R],
    registry: &mut NameRegistry<T>,
    fraction: Fraction,
) -> Result<ClassifiedMatrix> {
    let first = rows
        .first()
        .ok_or_else(|| Error::InvalidInput("matrix has no rows".into()))?;
    let width = first.as_ref().len();
    let mut summaries = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != width {
            return Err(Error::InvalidInput(format!(
                "row {i} has width {}, expected {width}",
                row.len()
            )));
        }
        summaries.push(summarize_row(row, registry, fraction).map_err(|e| e.at_row(i))?);
    }
    let col = SummaryColumn::from_rows(&summaries)?;
    let lw = alg2_2dlw(&col);
    let lcm = lw.lcm().clone();
    Ok(ClassifiedMatrix {
        key: MatrixClassKey {
            names: col.names,
            offsets: lw.offsets,
        },
        z: lw.z,
        lcm,
        rows: rows.len(),
        width,
        periods: col.periods,
        lwpos: col.lwpos,
        fraction,
    })
}

/// Column rotation `c` such that rotating `a`'s LCM-matrix left by `c`
/// yields `b`'s, or `None` when the two are in different classes.
pub fn conjugacy_shift(a: &ClassifiedMatrix, b: &ClassifiedMatrix) -> Result<Option<BigUint>> {
    if a.rows != b.rows {
        return Err(Error::InvalidQuery(format!(
            "row counts differ: {} vs {}",
            a.rows, b.rows
        )));
    }
    if a.key != b.key {
        return Ok(None);
    }
    // same names imply same periods and hence the same LCM
    Ok(Some(sub_mod_big(&a.z, &b.z, &a.lcm)))
}

fn sub_mod_big(a: &BigUint, b: &BigUint, n: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        n + a - b
    }
}

/// Width of the widest horizontal suffix of `a` equal to a prefix of `b`,
/// when it spans at least half the columns.
///
/// Both matrices must be `rows x m` and classified with periods of at most
/// `m/4`. No matrix entries are read.
pub fn longest_suffix_prefix(a: &ClassifiedMatrix, b: &ClassifiedMatrix) -> Result<Option<usize>> {
    if a.rows != b.rows || a.width != b.width {
        return Err(Error::InvalidQuery(format!(
            "dimensions differ: {}x{} vs {}x{}",
            a.rows, a.width, b.rows, b.width
        )));
    }
    if a.fraction > QUARTER || b.fraction > QUARTER {
        return Err(Error::InvalidQuery(
            "overlap queries need rows classified with periods of at most width/4".into(),
        ));
    }
    let Some(shift) = conjugacy_shift(a, b)? else {
        return Ok(None);
    };
    let m = a.width;
    Ok(match shift.to_usize() {
        Some(s) if s <= m / 2 => Some(m - s),
        _ => None,
    })
}
