//! Text encodings of binary matrices.
//!
//! * `dense`: one row per line, `0`/`1` characters, whitespace ignored. Blank
//!   lines and lines starting with `#` are skipped.
//! * `cols-int`: a `k=K` header, then whitespace-separated column integers.
//!   Entry `i` of a column is bit `i`, so `(1,0,1,1)` is `13`.
//! * `json`: `{"rows": R, "cols": C, "data": ["0110", ...]}`.

use std::fmt;
use std::str::FromStr;

use binframe_core::BinMatrix;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Dense,
    ColsInt,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Dense => "dense",
            Format::ColsInt => "cols-int",
            Format::Json => "json",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dense" => Ok(Format::Dense),
            "cols-int" => Ok(Format::ColsInt),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// A malformed matrix document. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Guesses the format: JSON if the text opens with `{`, cols-int if the
/// first content line starts with `k=`, dense otherwise.
pub fn detect_format(text: &str) -> Format {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return Format::Json;
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("k=") || l.starts_with("k =") => Format::ColsInt,
        _ => Format::Dense,
    }
}

pub fn parse_matrix(text: &str, format: Format) -> Result<BinMatrix, ParseError> {
    match format {
        Format::Dense => parse_dense(text),
        Format::ColsInt => parse_cols_int(text),
        Format::Json => parse_json(text),
    }
}

pub fn parse_bits(text: &str, line: usize) -> Result<Vec<bool>, ParseError> {
    let mut bits = Vec::new();
    for (i, ch) in text.chars().enumerate() {
        match ch {
            '0' => bits.push(false),
            '1' => bits.push(true),
            c if c.is_whitespace() => {}
            c => {
                return Err(ParseError::new(
                    line,
                    i + 1,
                    format!("expected 0 or 1, found `{c}`"),
                ))
            }
        }
    }
    Ok(bits)
}

fn parse_dense(text: &str) -> Result<BinMatrix, ParseError> {
    let mut rows: Vec<Vec<bool>> = Vec::new();
    let mut first_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bits = parse_bits(line, idx + 1)?;
        if let Some(first) = rows.first() {
            if bits.len() != first.len() {
                return Err(ParseError::new(
                    idx + 1,
                    1,
                    format!(
                        "row has {} entries but line {first_line} has {}",
                        bits.len(),
                        first.len()
                    ),
                ));
            }
        } else {
            first_line = idx + 1;
        }
        rows.push(bits);
    }
    if rows.is_empty() {
        return Err(ParseError::new(1, 1, "no matrix rows found"));
    }
    let (r, c) = (rows.len(), rows[0].len());
    Ok(BinMatrix::from_fn(r, c, |i, j| rows[i][j]).expect("non-empty"))
}

fn parse_cols_int(text: &str) -> Result<BinMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "missing `k=K` header"))?;
    let hcol = header.len() - header.trim_start().len() + 1;
    let k: usize = header
        .trim()
        .strip_prefix('k')
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix('='))
        .map(str::trim)
        .ok_or_else(|| ParseError::new(hline + 1, hcol, "expected header `k=K`"))?
        .parse()
        .map_err(|_| ParseError::new(hline + 1, hcol, "header `k=K` needs a positive integer K"))?;
    if !(1..=64).contains(&k) {
        return Err(ParseError::new(
            hline + 1,
            hcol,
            format!("k={k} is outside 1..=64"),
        ));
    }
    let mut cols = Vec::new();
    for (idx, line) in lines {
        let mut offset = 0;
        for token in line.split_whitespace() {
            let start = line[offset..].find(token).expect("token in line") + offset;
            offset = start + token.len();
            let pos = (idx + 1, start + 1);
            let value: u64 = token.parse().map_err(|_| {
                ParseError::new(pos.0, pos.1, format!("`{token}` is not a non-negative integer"))
            })?;
            if k < 64 && value >> k != 0 {
                return Err(ParseError::new(
                    pos.0,
                    pos.1,
                    format!("{value} does not fit in k={k} bits"),
                ));
            }
            cols.push(value);
        }
    }
    if cols.is_empty() {
        return Err(ParseError::new(
            hline + 1,
            1,
            "no column integers after the header",
        ));
    }
    Ok(BinMatrix::from_column_integers(k, &cols).expect("validated"))
}

fn parse_json(text: &str) -> Result<BinMatrix, ParseError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line().max(1), e.column().max(1), e.to_string()))?;
    matrix_from_json(&value)
}

/// Reads `{"rows", "cols", "data"}`; shape errors are reported at 1:1.
pub fn matrix_from_json(value: &Value) -> Result<BinMatrix, ParseError> {
    let err = |m: String| ParseError::new(1, 1, m);
    let field = |name: &str| {
        value
            .get(name)
            .and_then(Value::as_u64)
            .ok_or_else(|| err(format!("missing or non-integer field `{name}`")))
    };
    let rows = field("rows")? as usize;
    let cols = field("cols")? as usize;
    let data = value
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| err("missing array field `data`".into()))?;
    if rows == 0 || cols == 0 {
        return Err(err("`rows` and `cols` must be positive".into()));
    }
    if data.len() != rows {
        return Err(err(format!("`data` has {} rows, expected {rows}", data.len())));
    }
    let mut bits = Vec::with_capacity(rows);
    for (i, row) in data.iter().enumerate() {
        let s = row
            .as_str()
            .ok_or_else(|| err(format!("data[{i}] is not a string")))?;
        let b = parse_bits(s, 1).map_err(|e| err(format!("data[{i}]: {}", e.message)))?;
        if b.len() != cols {
            return Err(err(format!("data[{i}] has {} entries, expected {cols}", b.len())));
        }
        bits.push(b);
    }
    Ok(BinMatrix::from_fn(rows, cols, |i, j| bits[i][j]).expect("non-empty"))
}

pub fn matrix_to_json(m: &BinMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "data": m.row_vectors().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

/// Column integers of `m`, or `None` with more than 64 rows.
pub fn column_integers(m: &BinMatrix) -> Option<Vec<u64>> {
    m.column_vectors().iter().map(|c| c.to_integer()).collect()
}

/// Renders `m` with a trailing newline. `cols-int` needs at most 64 rows.
pub fn render_matrix(m: &BinMatrix, format: Format) -> Option<String> {
    Some(match format {
        Format::Dense => format!("{m}\n"),
        Format::ColsInt => {
            let ints = column_integers(m)?;
            let body: Vec<String> = ints.iter().map(u64::to_string).collect();
            format!("k={}\n{}\n", m.rows(), body.join(" "))
        }
        Format::Json => format!("{}\n", matrix_to_json(m)),
    })
}
