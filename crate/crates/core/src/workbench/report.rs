use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lw2d::{alg2_2dlw, incremental_2dlw, naive_2dlw, Alg1Bound, SummaryColumn};
use crate::strings1d::{summarize_row, NameRegistry};
use crate::Fraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Alg1,
    Alg2,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Naive => "naive",
            Algorithm::Alg1 => "alg1",
            Algorithm::Alg2 => "alg2",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Algorithm::Naive),
            "alg1" => Ok(Algorithm::Alg1),
            "alg2" => Ok(Algorithm::Alg2),
            other => Err(Error::InvalidInput(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Result of classifying one matrix file. Big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub rows: usize,
    pub width: usize,
    pub periods: Vec<usize>,
    pub lwpos: Vec<usize>,
    pub names: Vec<String>,
    pub offsets: Vec<usize>,
    pub z: String,
    pub lcm: String,
    pub algorithm: Algorithm,
    pub elapsed_ns: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub algorithm: Algorithm,
    pub fraction: Fraction,
    pub cap: u64,
    /// Scan up to `LCM_m` in the elimination algorithm (capped).
    pub faithful: bool,
}

/// Names the rows and runs the selected algorithm. `elapsed_ns` covers the
/// algorithm only, not the naming.
pub fn classify_report(rows: &[Vec<char>], opts: &ClassifyOptions) -> Result<ClassifyReport> {
    let width = rows.first().map_or(0, Vec::len);
    let mut registry = NameRegistry::new();
    let summaries = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != width {
                return Err(Error::InvalidInput(format!("row {i} has width {}, expected {width}", r.len())));
            }
            summarize_row(r, &mut registry, opts.fraction).map_err(|e| e.at_row(i))
        })
        .collect::<Result<Vec<_>>>()?;
    let col = SummaryColumn::from_rows(&summaries)?;

    let start = Instant::now();
    let lw = match opts.algorithm {
        Algorithm::Naive => naive_2dlw(&col, opts.cap)?,
        Algorithm::Alg1 if opts.faithful => incremental_2dlw(&col, Alg1Bound::Faithful { cap: opts.cap })?,
        Algorithm::Alg1 => incremental_2dlw(&col, Alg1Bound::Period)?,
        Algorithm::Alg2 => alg2_2dlw(&col),
    };
    let elapsed_ns = start.elapsed().as_nanos() as u64;

    Ok(ClassifyReport {
        rows: rows.len(),
        width,
        names: col
            .names
            .iter()
            .map(|&n| registry.word(n).expect("interned").iter().collect())
            .collect(),
        periods: col.periods,
        lwpos: col.lwpos,
        z: lw.z.to_string(),
        lcm: lw.lcm().to_string(),
        offsets: lw.offsets,
        algorithm: opts.algorithm,
        elapsed_ns,
    })
}
