use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use lyndon2d::classify::{classify_matrix, conjugacy_shift, longest_suffix_prefix};
use lyndon2d::dictmatch::{brute_search, search_text_with, DictionaryIndex, SearchOptions};
use lyndon2d::lw2d::DEFAULT_CAP;
use lyndon2d::strings1d::{row_shape, NameRegistry};
use lyndon2d::workbench::bench::{render_tsv, run_bench, BenchMode, BenchOptions};
use lyndon2d::workbench::{
    classify_report, generate, read_matrix, render_matrix, Algorithm, ClassifyOptions, GenOptions, PeriodSpec,
};
use lyndon2d::{Error, Fraction, QUARTER};

#[derive(Parser)]
#[command(name = "lyndon2d", version, about = "2D Lyndon word classification and dictionary matching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the 2D Lyndon word of a matrix file.
    Classify {
        path: PathBuf,
        #[arg(long, default_value = "alg2")]
        algo: Algorithm,
        /// Largest allowed row period as a fraction of the width.
        #[arg(long, default_value = "1/2")]
        fraction: Fraction,
        /// Column limit for the naive and faithful modes.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        /// Let alg1 scan columns up to LCM_m as literally written.
        #[arg(long)]
        faithful: bool,
    },
    /// Decide whether two matrices' LCM-matrices are horizontal conjugates.
    Conjugate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "1/2")]
        fraction: Fraction,
    },
    /// Widest horizontal suffix of A equal to a prefix of B (at least half the width).
    Overlap { a: PathBuf, b: PathBuf },
    /// Find all occurrences of square patterns in a text.
    Search {
        #[arg(long)]
        text: PathBuf,
        #[arg(long = "pattern", required = true, num_args = 1..)]
        patterns: Vec<PathBuf>,
        /// Also run the brute-force matcher and require identical results.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Write a random matrix with periodic rows to stdout.
    Gen {
        #[arg(long, default_value_t = 8)]
        rows: usize,
        #[arg(long, default_value_t = 8)]
        width: usize,
        /// Comma-separated list, `prime-set` or `random`.
        #[arg(long, default_value = "random")]
        periods: PeriodSpec,
        #[arg(long, default_value_t = 3)]
        alphabet: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Shift the periodic content of every row left by this many columns.
        #[arg(long)]
        rotate: Option<usize>,
        /// Require periods of at most width/4.
        #[arg(long)]
        strict: bool,
    },
    /// Time the three algorithms; prints a TSV table.
    Bench {
        #[arg(long, default_value = "small-lcm")]
        mode: BenchMode,
        #[arg(long, value_delimiter = ',', default_value = "8,16,32")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long)]
        parallel: bool,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn emit(value: serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{value}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify {
            path,
            algo,
            fraction,
            cap,
            faithful,
        } => {
            let rows = read_matrix(&path)?;
            let report = classify_report(
                &rows,
                &ClassifyOptions {
                    algorithm: algo,
                    fraction,
                    cap,
                    faithful,
                },
            )?;
            emit(serde_json::to_value(report).expect("serializable"));
        }
        Command::Conjugate { a, b, fraction } => {
            let (ra, rb) = (read_matrix(&a)?, read_matrix(&b)?);
            let mut registry = NameRegistry::new();
            let ca = classify_matrix(&ra, &mut registry, fraction)?;
            let cb = classify_matrix(&rb, &mut registry, fraction)?;
            match conjugacy_shift(&ca, &cb)? {
                Some(shift) => emit(json!({"same_class": true, "shift": shift.to_string()})),
                None => emit(json!({"same_class": false})),
            }
        }
        Command::Overlap { a, b } => {
            let (ra, rb) = (read_matrix(&a)?, read_matrix(&b)?);
            let mut registry = NameRegistry::new();
            let ca = classify_matrix(&ra, &mut registry, QUARTER)?;
            let cb = classify_matrix(&rb, &mut registry, QUARTER)?;
            match longest_suffix_prefix(&ca, &cb)? {
                Some(width) => emit(json!({"match": true, "width": width})),
                None => emit(json!({"match": false})),
            }
        }
        Command::Search {
            text,
            patterns,
            oracle,
            parallel,
        } => {
            let text = read_matrix(&text)?;
            let patterns = patterns
                .iter()
                .map(|path| {
                    let rows = read_matrix(path)?;
                    for (i, row) in rows.iter().enumerate() {
                        row_shape(row, QUARTER).map_err(|e| {
                            Failure::Domain(format!("{}: {}", path.display(), e.at_row(i)))
                        })?;
                    }
                    Ok(rows)
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let index = DictionaryIndex::build(&patterns)?;
            let found = search_text_with(&text, &index, SearchOptions { parallel }).occurrences;
            if oracle {
                let truth: BTreeSet<_> = brute_search(&text, &patterns);
                if truth != found {
                    return Err(Failure::Domain(format!(
                        "oracle mismatch: search found {}, brute force found {}",
                        found.len(),
                        truth.len()
                    )));
                }
            }
            for occ in found {
                emit(serde_json::to_value(occ).expect("serializable"));
            }
        }
        Command::Gen {
            rows,
            width,
            periods,
            alphabet,
            seed,
            rotate,
            strict,
        } => {
            let matrix = generate(&GenOptions {
                rows,
                width,
                periods,
                alphabet,
                seed,
                rotate,
                strict,
            })?;
            print!("{}", render_matrix(&matrix));
        }
        Command::Bench {
            mode,
            sizes,
            repeats,
            cap,
            parallel,
        } => {
            let rows = run_bench(
                mode,
                &sizes,
                &BenchOptions {
                    repeats,
                    cap,
                    parallel,
                    ..Default::default()
                },
            )?;
            print!("{}", render_tsv(&rows));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
