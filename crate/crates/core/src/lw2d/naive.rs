use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{lcm_prefixes, sub_mod, SummaryColumn, TwoDLyndonWord};
use crate::error::{Error, Result};

/// Enumerates the LWpos array of every conjugate of the LCM-matrix and keeps
/// the smallest, breaking ties toward the smaller column.
///
/// Runs in `O(m * LCM_m)` and refuses to start when `LCM_m > cap`.
pub fn naive_2dlw(col: &SummaryColumn, cap: u64) -> Result<TwoDLyndonWord> {
    let lcm_prefix = lcm_prefixes(&col.periods);
    let lcm = lcm_prefix.last().expect("non-empty column");
    let width = match lcm.to_u64() {
        Some(w) if w <= cap => w,
        _ => {
            return Err(Error::CapExceeded {
                lcm: lcm.clone(),
                cap,
            })
        }
    };

    let offsets_at = |c: u64, out: &mut Vec<usize>| {
        out.clear();
        out.extend(
            col.periods
                .iter()
                .zip(&col.lwpos)
                .map(|(&p, &l)| sub_mod(l, (c % p as u64) as usize, p)),
        );
    };

    let mut best = Vec::with_capacity(col.len());
    offsets_at(0, &mut best);
    let mut best_col = 0u64;
    let mut current = Vec::with_capacity(col.len());
    for c in 1..width {
        offsets_at(c, &mut current);
        if current < best {
            std::mem::swap(&mut best, &mut current);
            best_col = c;
        }
    }

    Ok(TwoDLyndonWord {
        offsets: best,
        z: BigUint::from(best_col),
        lcm_prefix,
    })
}
