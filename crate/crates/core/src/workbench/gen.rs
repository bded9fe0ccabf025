//! Deterministic generators for matrices with periodic rows.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::strings1d::is_primitive;

/// How row periods are chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodSpec {
    /// Explicit periods, cycled when shorter than the row count.
    List(Vec<usize>),
    /// The first `rows` primes.
    PrimeSet,
    /// Uniform in `1..=bound`.
    Random,
}

impl FromStr for PeriodSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime-set" => Ok(PeriodSpec::PrimeSet),
            "random" => Ok(PeriodSpec::Random),
            list => list
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::InvalidInput(format!("bad period {p:?}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(PeriodSpec::List),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GenOptions {
    pub rows: usize,
    pub width: usize,
    pub periods: PeriodSpec,
    pub alphabet: usize,
    pub seed: u64,
    /// Shift every row's periodic content left by this many columns.
    pub rotate: Option<usize>,
    /// Bound periods by `width/4` instead of `width/2`.
    pub strict: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        Self {
            rows: 8,
            width: 8,
            periods: PeriodSpec::Random,
            alphabet: 3,
            seed: 0,
            rotate: None,
            strict: false,
        }
    }
}

pub const MAX_ALPHABET: usize = 26;

/// The first `n` primes.
pub fn first_primes(n: usize) -> Vec<usize> {
    let mut primes: Vec<usize> = Vec::with_capacity(n);
    let mut candidate = 2;
    while primes.len() < n {
        if primes.iter().take_while(|&&p| p * p <= candidate).all(|&p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// Uniformly random primitive word of length `period` over `alphabet` letters.
pub fn random_primitive_word<R: Rng>(rng: &mut R, period: usize, alphabet: &[char]) -> Result<Vec<char>> {
    if period > 1 && alphabet.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "no primitive word of length {period} over a one-letter alphabet"
        )));
    }
    loop {
        let word: Vec<char> = (0..period).map(|_| *alphabet.choose(rng).expect("non-empty")).collect();
        if is_primitive(&word) {
            return Ok(word);
        }
    }
}

/// Row of `width` characters repeating `word`, starting `shift` characters into it.
pub fn periodic_row<T: Clone>(word: &[T], shift: usize, width: usize) -> Vec<T> {
    (0..width).map(|j| word[(j + shift) % word.len()].clone()).collect()
}

/// Generates a matrix whose row `i` has exactly the requested period.
pub fn generate(opts: &GenOptions) -> Result<Vec<Vec<char>>> {
    if opts.rows == 0 || opts.width == 0 {
        return Err(Error::InvalidInput("rows and width must be positive".into()));
    }
    if opts.alphabet == 0 || opts.alphabet > MAX_ALPHABET {
        return Err(Error::InvalidInput(format!(
            "alphabet size must be in 1..={MAX_ALPHABET}"
        )));
    }
    let bound = if opts.strict { opts.width / 4 } else { opts.width / 2 };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let periods: Vec<usize> = match &opts.periods {
        PeriodSpec::List(list) if list.is_empty() => {
            return Err(Error::InvalidInput("empty period list".into()))
        }
        PeriodSpec::List(list) => (0..opts.rows).map(|i| list[i % list.len()]).collect(),
        PeriodSpec::PrimeSet => first_primes(opts.rows),
        PeriodSpec::Random => {
            if bound == 0 {
                return Err(Error::InvalidInput(format!("width {} admits no periodic row", opts.width)));
            }
            (0..opts.rows).map(|_| rng.gen_range(1..=bound)).collect()
        }
    };
    if let Some((i, &p)) = periods.iter().enumerate().find(|(_, &p)| p > bound) {
        return Err(Error::InvalidInput(format!(
            "row {i}: period {p} exceeds {bound} for width {}",
            opts.width
        )));
    }

    let alphabet: Vec<char> = (b'a'..).take(opts.alphabet).map(char::from).collect();
    let shift = opts.rotate.unwrap_or(0);
    periods
        .iter()
        .map(|&p| {
            let word = random_primitive_word(&mut rng, p, &alphabet)?;
            Ok(periodic_row(&word, shift % p, opts.width))
        })
        .collect()
}
