use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{big_mod, lcm_prefixes, sub_mod, SummaryColumn, TwoDLyndonWord};
use crate::error::{Error, Result};

/// How far the elimination loop scans candidate columns for a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alg1Bound {
    /// Scan `x` in `[0, LCM[i] / LCM[i-1])`. The sequence of candidate
    /// values repeats after that many steps, so nothing is lost.
    #[default]
    Period,
    /// Scan every `x` with `z + x * LCM[i-1] <= LCM_m`, as the pseudocode
    /// is written. Needs `LCM_m` up front, so it is capped.
    Faithful { cap: u64 },
}

/// Row-by-row elimination of LCM-matrix columns.
///
/// Before row `i` the surviving columns are `z, z + LCM[i-1], ...`. Rows
/// whose period divides `LCM[i-1]` see the same offset in all of them.
/// Otherwise the offset in column `z + x * LCM[i-1]` is
/// `(firstShift - x * LCM[i-1]) mod period[i]`; the first minimizing `x`
/// survives.
pub fn incremental_2dlw(col: &SummaryColumn, bound: Alg1Bound) -> Result<TwoDLyndonWord> {
    let total = match bound {
        Alg1Bound::Period => None,
        Alg1Bound::Faithful { cap } => {
            let lcm = lcm_prefixes(&col.periods).pop().expect("non-empty column");
            match lcm.to_u64() {
                Some(v) if v <= cap => Some(BigUint::from(v)),
                _ => return Err(Error::CapExceeded { lcm, cap }),
            }
        }
    };

    let m = col.len();
    let mut offsets = Vec::with_capacity(m);
    let mut lcm_prefix: Vec<BigUint> = Vec::with_capacity(m);
    offsets.push(0);
    let mut z = BigUint::from(col.lwpos[0]);
    lcm_prefix.push(BigUint::from(col.periods[0]));

    for i in 1..m {
        let p = col.periods[i];
        let prev = &lcm_prefix[i - 1];
        let prev_mod = big_mod(prev, p);
        let g = prev_mod.gcd(&p);
        let next = prev * (p / g) as u64;
        let first_shift = sub_mod(col.lwpos[i], big_mod(&z, p), p);

        if prev_mod == 0 {
            offsets.push(first_shift);
        } else {
            let candidates: u64 = match &total {
                None => (p / g) as u64,
                Some(lcm_m) => ((lcm_m - &z) / prev).to_u64().expect("capped") + 1,
            };
            let (mut best, mut best_x) = (first_shift, 0u64);
            let mut value = first_shift;
            for x in 1..candidates {
                value = sub_mod(value, prev_mod, p);
                if value < best {
                    best = value;
                    best_x = x;
                }
            }
            offsets.push(best);
            z += prev * best_x;
        }
        lcm_prefix.push(next);
    }

    Ok(TwoDLyndonWord {
        offsets,
        z,
        lcm_prefix,
    })
}

/// Elimination with the period-bounded scan.
pub fn alg1_2dlw(col: &SummaryColumn) -> TwoDLyndonWord {
    incremental_2dlw(col, Alg1Bound::Period).expect("the period bound never caps")
}
