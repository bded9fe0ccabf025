//! File formats, reports, input generators and the benchmark harness used
//! by the command-line tool.

pub mod bench;
pub mod gen;
pub mod matrix_file;
pub mod report;

pub use bench::{run_bench, BenchMode, BenchOptions, BenchRow};
pub use gen::{generate, GenOptions, PeriodSpec};
pub use matrix_file::{parse_matrix, read_matrix, render_matrix};
pub use report::{classify_report, Algorithm, ClassifyOptions, ClassifyReport};
