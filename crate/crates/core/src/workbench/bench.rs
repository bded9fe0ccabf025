//! Timing harness comparing the three 2D Lyndon word algorithms.
//!
//! Each case is a random [`SummaryColumn`] with `m` rows. Outputs of all
//! runnable algorithms are cross-checked before anything is timed.

use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::gen::first_primes;
use crate::error::{Error, Result};
use crate::lw2d::{alg1_2dlw, alg2_2dlw, naive_2dlw, SummaryColumn, TwoDLyndonWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMode {
    /// Periods drawn from {1, 2, 3, 4, 6}: `LCM_m <= 12`.
    SmallLcm,
    /// Row `i` has the `i`-th prime as period: `LCM_m` is a primorial.
    PrimeLcm,
}

impl FromStr for BenchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small-lcm" => Ok(BenchMode::SmallLcm),
            "prime-lcm" => Ok(BenchMode::PrimeLcm),
            other => Err(Error::InvalidInput(format!("unknown bench mode {other:?}"))),
        }
    }
}

const SMALL_PERIODS: [usize; 5] = [1, 2, 3, 4, 6];

/// The deterministic input used for size `m`.
pub fn bench_column(mode: BenchMode, m: usize) -> SummaryColumn {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d_1d + m as u64);
    let periods: Vec<usize> = match mode {
        BenchMode::SmallLcm => (0..m).map(|_| SMALL_PERIODS[rng.gen_range(0..SMALL_PERIODS.len())]).collect(),
        BenchMode::PrimeLcm => first_primes(m),
    };
    let lwpos = periods.iter().map(|&p| rng.gen_range(0..p)).collect();
    SummaryColumn::anonymous(periods, lwpos).expect("valid column")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub m: usize,
    pub lcm: BigUint,
    /// `None` when the naive algorithm was blocked by the cap.
    pub t_naive: Option<u64>,
    pub t_alg1: u64,
    pub t_alg2: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchOptions {
    pub repeats: usize,
    pub cap: u64,
    /// Minimum wall time of one timed sample; short runs are batched.
    pub min_sample: Duration,
    pub parallel: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            repeats: 5,
            cap: crate::lw2d::DEFAULT_CAP,
            min_sample: Duration::from_millis(2),
            parallel: false,
        }
    }
}

/// Median nanoseconds per call of `f` over `repeats` batched samples.
fn time_median<F: FnMut() -> TwoDLyndonWord>(mut f: F, repeats: usize, min_sample: Duration) -> u64 {
    let start = Instant::now();
    black_box(f());
    let once = start.elapsed().max(Duration::from_nanos(1));
    let batch = (min_sample.as_nanos() / once.as_nanos()).clamp(1, 1 << 20) as u32;

    let mut samples: Vec<u64> = (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                black_box(f());
            }
            (start.elapsed().as_nanos() / batch as u128) as u64
        })
        .collect();
    samples.sort_unstable();
    samples[samples.len() / 2]
}

pub fn bench_case(mode: BenchMode, m: usize, opts: &BenchOptions) -> Result<BenchRow> {
    let col = bench_column(mode, m);
    let fast2 = alg2_2dlw(&col);
    let fast1 = alg1_2dlw(&col);
    if fast1 != fast2 {
        return Err(Error::InvalidInput(format!("m={m}: elimination and modular algorithms disagree")));
    }
    let naive = match naive_2dlw(&col, opts.cap) {
        Ok(lw) => {
            if lw != fast2 {
                return Err(Error::InvalidInput(format!("m={m}: naive algorithm disagrees")));
            }
            true
        }
        Err(Error::CapExceeded { .. }) => false,
        Err(e) => return Err(e),
    };

    let t_naive = naive.then(|| {
        time_median(|| naive_2dlw(&col, opts.cap).expect("checked"), opts.repeats, opts.min_sample)
    });
    Ok(BenchRow {
        m,
        lcm: fast2.lcm().clone(),
        t_naive,
        t_alg1: time_median(|| alg1_2dlw(&col), opts.repeats, opts.min_sample),
        t_alg2: time_median(|| alg2_2dlw(&col), opts.repeats, opts.min_sample),
    })
}

pub fn run_bench(mode: BenchMode, sizes: &[usize], opts: &BenchOptions) -> Result<Vec<BenchRow>> {
    if sizes.contains(&0) {
        return Err(Error::InvalidInput("sizes must be positive".into()));
    }
    if opts.parallel {
        sizes.par_iter().map(|&m| bench_case(mode, m, opts)).collect()
    } else {
        sizes.iter().map(|&m| bench_case(mode, m, opts)).collect()
    }
}

/// Decimal rendering, shortened to a prefix and a digit count past 24 digits.
pub fn render_lcm(lcm: &BigUint) -> String {
    let digits = lcm.to_string();
    if digits.len() <= 24 {
        digits
    } else {
        format!("{}...({} digits)", &digits[..8], digits.len())
    }
}

pub const TSV_HEADER: &str = "m\tlcm\tt_naive\tt_alg1\tt_alg2";

pub fn render_tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        let naive = r.t_naive.map_or_else(|| "cap".to_string(), |t| t.to_string());
        out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.m, render_lcm(&r.lcm), naive, r.t_alg1, r.t_alg2));
    }
    out
}

/// Least-squares slope of `ln t` against `ln m`.
pub fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(m, t)| (m.ln(), t.max(1.0).ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let var: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    cov / var
}
