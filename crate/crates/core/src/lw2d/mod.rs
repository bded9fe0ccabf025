//! 2D Lyndon words of matrices with periodic rows.
//!
//! Input is a [`SummaryColumn`]: the period and LWpos of every row. The
//! LCM-matrix has `LCM_m` columns, and the conjugate starting at column `c`
//! has LWpos array `(lwpos[i] - c) mod period[i]`. The 2D Lyndon word is the
//! lexicographically smallest of these arrays; `z` is the column where it
//! starts.
//!
//! Three routes compute it:
//! - [`naive_2dlw`] enumerates every column (test oracle, capped),
//! - [`alg1_2dlw`] eliminates columns row by row,
//! - [`alg2_2dlw`] solves each row's minimization with a modular inverse.
//!
//! Row indices are 0-based in code.

mod incremental;
mod modular;
mod naive;

pub use incremental::{alg1_2dlw, incremental_2dlw, Alg1Bound};
pub use modular::{alg2_2dlw, alg2_2dlw_traced, ModularLyndon, RowStep};
pub use naive::naive_2dlw;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::strings1d::{row_shape, NameId, RowSummary};
use crate::HALF;

/// Default number of LCM-matrix columns the enumerating routines will visit.
pub const DEFAULT_CAP: u64 = 1 << 22;

/// Periods, LWpos values and (optionally) names of the rows of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummaryColumn {
    pub periods: Vec<usize>,
    pub lwpos: Vec<usize>,
    /// Empty for columns built without a registry.
    pub names: Vec<NameId>,
}

impl SummaryColumn {
    pub fn new(periods: Vec<usize>, lwpos: Vec<usize>, names: Vec<NameId>) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::InvalidInput("a summary column needs at least one row".into()));
        }
        if periods.len() != lwpos.len() || !(names.is_empty() || names.len() == periods.len()) {
            return Err(Error::InvalidInput("summary arrays differ in length".into()));
        }
        for (i, (&p, &l)) in periods.iter().zip(&lwpos).enumerate() {
            if p == 0 || l >= p {
                return Err(Error::InvalidInput(format!(
                    "row {i}: need 0 <= lwpos < period, got lwpos {l}, period {p}"
                )));
            }
        }
        Ok(Self {
            periods,
            lwpos,
            names,
        })
    }

    /// A column without row names; enough for every routine in this module.
    pub fn anonymous(periods: Vec<usize>, lwpos: Vec<usize>) -> Result<Self> {
        Self::new(periods, lwpos, Vec::new())
    }

    pub fn from_rows(rows: &[RowSummary]) -> Result<Self> {
        Self::new(
            rows.iter().map(|r| r.period).collect(),
            rows.iter().map(|r| r.lwpos).collect(),
            rows.iter().map(|r| r.name).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.periods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.periods.is_empty()
    }

    /// LWpos array of the conjugate whose first column is `shift` columns
    /// to the right of column 0 of the LCM-matrix.
    pub fn shifted(&self, shift: &BigUint) -> Self {
        Self {
            periods: self.periods.clone(),
            lwpos: conjugate_offsets(self, shift),
            names: self.names.clone(),
        }
    }

    /// Keeps rows `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        Self {
            periods: self.periods[range.clone()].to_vec(),
            lwpos: self.lwpos[range.clone()].to_vec(),
            names: if self.names.is_empty() {
                Vec::new()
            } else {
                self.names[range].to_vec()
            },
        }
    }
}

/// Offsets of the canonical conjugate, its column `z` in the LCM-matrix and
/// the running LCM of the row periods.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoDLyndonWord {
    pub offsets: Vec<usize>,
    pub z: BigUint,
    pub lcm_prefix: Vec<BigUint>,
}

impl TwoDLyndonWord {
    /// `LCM_m`, the width of the LCM-matrix.
    pub fn lcm(&self) -> &BigUint {
        self.lcm_prefix.last().expect("at least one row")
    }
}

/// `a mod n` for a big `a` and a machine-word `n`.
pub(crate) fn big_mod(a: &BigUint, n: usize) -> usize {
    (a % n as u64).to_usize().expect("remainder below a usize modulus")
}

/// GCD of a big value and a word-sized one: one big modulus, then word Euclid.
pub(crate) fn big_gcd(a: &BigUint, n: usize) -> usize {
    big_mod(a, n).gcd(&n)
}

/// `(a - b) mod n` for `a, b < n`.
pub(crate) fn sub_mod(a: usize, b: usize, n: usize) -> usize {
    if a >= b {
        a - b
    } else {
        a + n - b
    }
}

pub(crate) fn mul_mod(a: usize, b: usize, n: usize) -> usize {
    ((a as u128 * b as u128) % n as u128) as usize
}

/// Running LCM of the periods: `result[i] = lcm(result[i - 1], periods[i])`.
pub fn lcm_prefixes(periods: &[usize]) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(periods.len());
    let mut acc = BigUint::one();
    for &p in periods {
        assert!(p > 0, "periods are positive");
        let g = big_gcd(&acc, p);
        acc *= (p / g) as u64;
        out.push(acc.clone());
    }
    out
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
///
/// Every residue is congruent modulo 1, so the inverse modulo 1 is 0.
pub fn mod_inverse(a: &BigUint, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if n == 1 {
        return Ok(0);
    }
    let a = (a % n).to_u64().expect("residue fits in u64");
    let (mut r0, mut r1) = (n as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NoInverse { value: a, modulus: n });
    }
    Ok(t0.rem_euclid(n as i128) as u64)
}

/// LWpos array of the conjugate of the LCM-matrix beginning at column `c`.
pub fn conjugate_offsets(col: &SummaryColumn, c: &BigUint) -> Vec<usize> {
    col.periods
        .iter()
        .zip(&col.lwpos)
        .map(|(&p, &l)| sub_mod(l, big_mod(c, p), p))
        .collect()
}

/// Truncates or periodically extends every row to width `LCM_m`.
pub fn materialize_lcm_matrix<T: Clone + Ord, R: AsRef<[T]>>(rows: &[R], cap: u64) -> Result<Vec<Vec<T>>> {
    let mut periods = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let shape = row_shape(row.as_ref(), HALF).map_err(|e| e.at_row(i))?;
        periods.push(shape.period);
    }
    if periods.is_empty() {
        return Err(Error::InvalidInput("matrix has no rows".into()));
    }
    let lcm = lcm_prefixes(&periods).pop().expect("non-empty");
    let width = match lcm.to_u64() {
        Some(w) if w <= cap => w as usize,
        _ => return Err(Error::CapExceeded { lcm, cap }),
    };
    Ok(rows
        .iter()
        .zip(&periods)
        .map(|(row, &p)| {
            let row = row.as_ref();
            (0..width).map(|j| row[j % p].clone()).collect()
        })
        .collect())
}
