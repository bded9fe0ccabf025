//! Plain-text matrix files: one row per line, all rows the same width.
//! Blank lines and lines starting with `#` are skipped.

use std::path::Path;

use crate::error::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<Vec<Vec<char>>> {
    let mut rows: Vec<Vec<char>> = Vec::new();
    let mut width_line = 0;
    for (idx, line) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<char> = line.chars().collect();
        if let Some(bad) = row.iter().find(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("unexpected character {bad:?}"),
            });
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "row has width {}, but line {width_line} has width {}",
                        row.len(),
                        first.len()
                    ),
                });
            }
        } else {
            width_line = line_no;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no matrix rows".into(),
        });
    }
    Ok(rows)
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<Vec<Vec<char>>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_matrix(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

/// Renders rows one per line with a trailing newline.
pub fn render_matrix(rows: &[Vec<char>]) -> String {
    let mut out = String::with_capacity(rows.iter().map(|r| r.len() + 1).sum());
    for row in rows {
        out.extend(row.iter());
        out.push('\n');
    }
    out
}
