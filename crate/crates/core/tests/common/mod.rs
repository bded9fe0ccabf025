//! Independent oracles and input builders shared by the integration tests.
//! Nothing here calls into the algorithms under test.
#![allow(dead_code)]

use rand::Rng;

pub type Matrix = Vec<Vec<u8>>;

/// Smallest period by trying every candidate length.
pub fn brute_period(s: &[u8]) -> usize {
    (1..=s.len())
        .find(|&p| (0..s.len() - p).all(|j| s[j] == s[j + p]))
        .unwrap()
}

pub fn rotations(s: &[u8]) -> Vec<Vec<u8>> {
    (0..s.len()).map(|k| [&s[k..], &s[..k]].concat()).collect()
}

/// Least rotation among all rotations.
pub fn brute_lyndon(s: &[u8]) -> Vec<u8> {
    rotations(s).into_iter().min().unwrap()
}

/// Period and first occurrence of the period's least rotation, by brute force.
pub fn brute_row(s: &[u8]) -> (usize, usize) {
    let p = brute_period(s);
    let word = brute_lyndon(&s[..p]);
    let lwpos = (0..=s.len() - p).find(|&k| s[k..k + p] == word[..]).unwrap();
    (p, lwpos)
}

pub fn brute_lwpos_array(rows: &[Vec<u8>]) -> (Vec<usize>, Vec<usize>) {
    rows.iter().map(|r| brute_row(r)).unzip()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm_all(periods: &[usize]) -> u64 {
    periods.iter().fold(1u64, |acc, &p| acc / gcd(acc, p as u64) * p as u64)
}

/// LWpos array of the conjugate starting at column `c`, from the formula.
pub fn conjugate_array(periods: &[usize], lwpos: &[usize], c: u64) -> Vec<usize> {
    periods
        .iter()
        .zip(lwpos)
        .map(|(&p, &l)| ((l as i128 - c as i128).rem_euclid(p as i128)) as usize)
        .collect()
}

/// Smallest conjugate array and the first column attaining it.
pub fn brute_min_conjugate(periods: &[usize], lwpos: &[usize]) -> (Vec<usize>, u64) {
    let lcm = lcm_all(periods);
    (0..lcm)
        .map(|c| (conjugate_array(periods, lwpos, c), c))
        .min()
        .unwrap()
}

/// Random primitive word of length `p` over the first `k` lowercase letters.
pub fn random_primitive<R: Rng>(rng: &mut R, p: usize, k: u8) -> Vec<u8> {
    assert!(p == 1 || k >= 2);
    loop {
        let w: Vec<u8> = (0..p).map(|_| b'a' + rng.gen_range(0..k)).collect();
        if brute_period(&w) == p || !p.is_multiple_of(brute_period(&w)) {
            return w;
        }
    }
}

/// Row of `width` characters repeating `word` from offset `shift`.
pub fn periodic(word: &[u8], shift: usize, width: usize) -> Vec<u8> {
    (0..width).map(|j| word[(j + shift) % word.len()]).collect()
}

/// Row of period `lyndon.len()` whose Lyndon word starts at `lwpos`.
pub fn row_with_lwpos(lyndon: &[u8], lwpos: usize, width: usize) -> Vec<u8> {
    let p = lyndon.len();
    periodic(lyndon, (p - lwpos % p) % p, width)
}

/// Shifts every periodic row left by `c`, continuing its period.
pub fn shift_left(rows: &[Vec<u8>], c: usize) -> Matrix {
    rows.iter()
        .map(|r| {
            let p = brute_period(r);
            (0..r.len()).map(|j| r[(j + c) % p]).collect()
        })
        .collect()
}

/// Random matrix with the given row periods.
pub fn random_matrix<R: Rng>(rng: &mut R, periods: &[usize], width: usize, k: u8) -> Matrix {
    periods
        .iter()
        .map(|&p| {
            let w = random_primitive(rng, p, k);
            let shift = rng.gen_range(0..p);
            periodic(&w, shift, width)
        })
        .collect()
}

/// Widest `w >= ceil(m/2)` with the last `w` columns of `a` equal to the
/// first `w` columns of `b`.
pub fn overlap_oracle(a: &[Vec<u8>], b: &[Vec<u8>]) -> Option<usize> {
    let m = a[0].len();
    (m.div_ceil(2)..=m)
        .rev()
        .find(|&w| a.iter().zip(b).all(|(ra, rb)| ra[m - w..] == rb[..w]))
}

/// Occurrences of `pattern` in `text` by direct comparison.
pub fn occurs_at(text: &[Vec<u8>], pattern: &[Vec<u8>], row: usize, col: usize) -> bool {
    let m2 = pattern[0].len();
    pattern
        .iter()
        .enumerate()
        .all(|(k, prow)| text[row + k][col..col + m2] == prow[..])
}
