use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{big_gcd, big_mod, mod_inverse, mul_mod, sub_mod, SummaryColumn, TwoDLyndonWord};
use crate::error::{Error, Result};

/// Big-integer or modular operations spent on one row: gcd, the two
/// divisions by it, the inverse, the new LCM, `z mod period`, firstShift,
/// its division, `x`, the offset and the update of `z`.
pub const OPS_PER_ROW: u64 = 11;

/// Intermediate values of one row of the modular algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowStep {
    /// `gcd(LCM[i-1], period[i])`
    pub gcd: usize,
    /// `LCM[i-1] / gcd`
    pub ell: BigUint,
    /// `period[i] / gcd`
    pub reduced_period: usize,
    /// Inverse of `ell` modulo `reduced_period` (0 when that modulus is 1).
    pub ell_inv: usize,
    pub first_shift: usize,
    /// Number of `LCM[i-1]` steps added to `z`.
    pub x: usize,
    pub offset: usize,
}

/// Row-at-a-time state of the modular-arithmetic algorithm.
///
/// Before any row `z = 0` and the running LCM is 1, so the first row goes
/// through the same step as the others and yields offset 0, `z = lwpos[0]`.
#[derive(Debug, Clone)]
pub struct ModularLyndon {
    offsets: Vec<usize>,
    z: BigUint,
    lcm_prefix: Vec<BigUint>,
    ops: u64,
}

impl Default for ModularLyndon {
    fn default() -> Self {
        Self::new()
    }
}

impl ModularLyndon {
    pub fn new() -> Self {
        Self {
            offsets: Vec::new(),
            z: BigUint::zero(),
            lcm_prefix: Vec::new(),
            ops: 0,
        }
    }

    pub fn with_capacity(rows: usize) -> Self {
        Self {
            offsets: Vec::with_capacity(rows),
            z: BigUint::zero(),
            lcm_prefix: Vec::with_capacity(rows),
            ops: 0,
        }
    }

    /// Adds the next row and returns the values computed for it.
    pub fn push(&mut self, period: usize, lwpos: usize) -> Result<RowStep> {
        if period == 0 || lwpos >= period {
            return Err(Error::InvalidInput(format!(
                "need 0 <= lwpos < period, got lwpos {lwpos}, period {period}"
            )));
        }
        let one = BigUint::one();
        let prev = self.lcm_prefix.last().unwrap_or(&one);

        let gcd = big_gcd(prev, period);
        let ell = prev / gcd as u64;
        let reduced_period = period / gcd;
        let ell_inv = mod_inverse(&ell, reduced_period as u64).expect("ell and p are coprime") as usize;
        let next = &ell * period as u64;

        let first_shift = sub_mod(lwpos, big_mod(&self.z, period), period);
        let div_first_shift = first_shift / gcd;
        let x = mul_mod(ell_inv, div_first_shift, reduced_period);
        // x * LCM[i-1] mod period, with LCM[i-1] = ell * gcd
        let step = mul_mod(x, big_mod(prev, period), period);
        let offset = sub_mod(first_shift, step, period);
        if x != 0 {
            self.z += prev * x as u64;
        }

        self.offsets.push(offset);
        self.lcm_prefix.push(next);
        self.ops += OPS_PER_ROW;
        Ok(RowStep {
            gcd,
            ell,
            reduced_period,
            ell_inv,
            first_shift,
            x,
            offset,
        })
    }

    pub fn rows(&self) -> usize {
        self.offsets.len()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Column of the canonical conjugate of the rows seen so far.
    pub fn z(&self) -> &BigUint {
        &self.z
    }

    /// Running LCM of the periods seen so far (1 before the first row).
    pub fn lcm(&self) -> BigUint {
        self.lcm_prefix.last().cloned().unwrap_or_else(BigUint::one)
    }

    pub fn lcm_prefix(&self) -> &[BigUint] {
        &self.lcm_prefix
    }

    /// Arithmetic operations performed so far.
    pub fn ops(&self) -> u64 {
        self.ops
    }

    /// `z` as a machine word, when it fits.
    pub fn z_u64(&self) -> Option<u64> {
        self.z.to_u64()
    }

    pub fn finish(self) -> TwoDLyndonWord {
        assert!(!self.offsets.is_empty(), "no rows were pushed");
        TwoDLyndonWord {
            offsets: self.offsets,
            z: self.z,
            lcm_prefix: self.lcm_prefix,
        }
    }
}

/// 2D Lyndon word by modular arithmetic, with the per-row intermediate values.
pub fn alg2_2dlw_traced(col: &SummaryColumn) -> (TwoDLyndonWord, Vec<RowStep>) {
    let mut state = ModularLyndon::with_capacity(col.len());
    let steps = col
        .periods
        .iter()
        .zip(&col.lwpos)
        .map(|(&p, &l)| state.push(p, l).expect("validated column"))
        .collect();
    (state.finish(), steps)
}

/// 2D Lyndon word by modular arithmetic: `O(1)` big-integer operations per row.
pub fn alg2_2dlw(col: &SummaryColumn) -> TwoDLyndonWord {
    alg2_2dlw_traced(col).0
}
