use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the naming, classification and matching routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("string is a proper power and has no Lyndon conjugate")]
    NotPrimitive,

    #[error("not a Lyndon word")]
    NotLyndon,

    #[error("{}period {period} exceeds the allowed bound for width {width}", row_prefix(*.row))]
    NotSufficientlyPeriodic {
        row: Option<usize>,
        period: usize,
        width: usize,
    },

    #[error("{value} has no inverse modulo {modulus}")]
    NoInverse { value: u64, modulus: u64 },

    #[error("LCM of the row periods is {lcm}, above the enumeration cap {cap}")]
    CapExceeded { lcm: BigUint, cap: u64 },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn row_prefix(row: Option<usize>) -> String {
    match row {
        Some(r) => format!("row {r}: "),
        None => String::new(),
    }
}

impl Error {
    /// Attaches a row index to a periodicity failure.
    pub fn at_row(self, index: usize) -> Self {
        match self {
            Error::NotSufficientlyPeriodic { period, width, .. } => Error::NotSufficientlyPeriodic {
                row: Some(index),
                period,
                width,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
