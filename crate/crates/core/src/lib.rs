//! Canonical classification of matrices whose rows are periodic.
//!
//! Every periodic row is named by the Lyndon word of its period and the
//! offset (LWpos) where that word first occurs. A matrix then reduces to
//! three arrays of length `m`, and the conjugate of its LCM-matrix with the
//! smallest LWpos array, the 2D Lyndon word, identifies its class under
//! cyclic permutation of columns. On top of that representation the crate
//! answers horizontal suffix-prefix queries with a constant number of
//! big-integer operations and runs 2D dictionary matching whose candidate
//! verification is pure arithmetic.
//!
//! Modules:
//! - [`strings1d`]: period, least rotation, row naming.
//! - [`lw2d`]: the naive enumeration, the incremental elimination algorithm
//!   and the modular-arithmetic algorithm.
//! - [`classify`]: class keys, conjugacy shifts and overlap queries.
//! - [`dictmatch`]: dictionary index, text search and verification.
//! - [`workbench`]: matrix files, reports, generators and benchmarks.

use std::fmt::Debug;
use std::hash::Hash;

pub mod classify;
pub mod dictmatch;
pub mod error;
pub mod lw2d;
pub mod strings1d;
pub mod workbench;

pub use error::{Error, Result};

/// Ratio bounding row periods relative to row width.
pub type Fraction = num_rational::Ratio<usize>;

/// Periods of at most half the width: the row is periodic.
pub const HALF: Fraction = Fraction::new_raw(1, 2);
/// Periods of at most a quarter of the width: the row is highly periodic.
pub const QUARTER: Fraction = Fraction::new_raw(1, 4);

/// Matrix entries. Any totally ordered, hashable type works; the CLI uses `char`.
pub trait Symbol: Ord + Hash + Clone + Debug + Send + Sync {}

impl<T: Ord + Hash + Clone + Debug + Send + Sync> Symbol for T {}
