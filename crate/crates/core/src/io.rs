//! Matrix parsing and serialization.
//!
//! Canonical text format: the first line holds the dimension `n`, followed by
//! `n` lines of `n` space-separated integers, LF line endings, optional
//! trailing newline. Also accepted: a JSON object
//! `{"n": int, "rows": [[int, ...], ...]}`. Integers are unbounded in both
//! formats.

use std::error::Error;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::matrix::IntMatrix;

/// Parse failure with a 1-based line/column diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl Error for ParseError {}

/// Splits a line into `(column, token)` pairs, columns 1-based in characters.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut chars = 0usize;
    let mut byte_start = 0usize;
    for (byte, ch) in line.char_indices() {
        chars += 1;
        if ch.is_whitespace() {
            if let Some(col) = start.take() {
                out.push((col, &line[byte_start..byte]));
            }
        } else if start.is_none() {
            start = Some(chars);
            byte_start = byte;
        }
    }
    if let Some(col) = start {
        out.push((col, &line[byte_start..]));
    }
    out
}

/// Parses the canonical text format.
pub fn parse_matrix_text(input: &str) -> Result<IntMatrix, ParseError> {
    let lines: Vec<&str> = input.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
    let header = tokens(lines.first().copied().unwrap_or(""));
    let (n_col, n_tok) = *header
        .first()
        .ok_or_else(|| ParseError::new(1, 1, "expected matrix dimension"))?;
    if let Some(&(col, tok)) = header.get(1) {
        return Err(ParseError::new(1, col, format!("unexpected token '{tok}' after dimension")));
    }
    let n: usize = n_tok
        .parse()
        .map_err(|_| ParseError::new(1, n_col, format!("invalid dimension '{n_tok}'")))?;

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in 0..n {
        let line_no = r + 2;
        let line = lines
            .get(r + 1)
            .ok_or_else(|| ParseError::new(line_no, 1, format!("expected {n} rows, found {r}")))?;
        let toks = tokens(line);
        if toks.len() != n {
            let (col, detail) = match toks.get(n) {
                Some(&(col, tok)) => (col, format!("unexpected token '{tok}'")),
                None => (
                    line.chars().count() + 1,
                    format!("expected {n} entries, found {}", toks.len()),
                ),
            };
            return Err(ParseError::new(line_no, col, detail));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            let value = BigInt::from_str(tok)
                .map_err(|_| ParseError::new(line_no, col, format!("invalid integer '{tok}'")))?;
            row.push(value);
        }
        rows.push(row);
    }
    for (extra, line) in lines.iter().enumerate().skip(n + 1) {
        if let Some(&(col, tok)) = tokens(line).first() {
            return Err(ParseError::new(
                extra + 1,
                col,
                format!("unexpected token '{tok}' after matrix"),
            ));
        }
    }
    Ok(IntMatrix::from_rows(rows))
}

/// Parses the JSON object format `{"n": int, "rows": [[int, ...], ...]}`.
pub fn parse_matrix_json(input: &str) -> Result<IntMatrix, ParseError> {
    let value: Value = serde_json::from_str(input)
        .map_err(|e| ParseError::new(e.line().max(1), e.column().max(1), e.to_string()))?;
    matrix_from_json_value(&value)
}

/// Structural validation of an already-parsed JSON value. Positions are not
/// tracked past syntax; diagnostics name the JSON path instead.
pub fn matrix_from_json_value(value: &Value) -> Result<IntMatrix, ParseError> {
    let at = |msg: String| ParseError::new(1, 1, msg);
    let obj = value
        .as_object()
        .ok_or_else(|| at("expected a JSON object with keys 'n' and 'rows'".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| at("'n' must be a non-negative integer".into()))? as usize;
    let rows_value = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| at("'rows' must be an array".into()))?;
    if rows_value.len() != n {
        return Err(at(format!("'rows' has {} rows, expected {n}", rows_value.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row_value) in rows_value.iter().enumerate() {
        let row = row_value
            .as_array()
            .ok_or_else(|| at(format!("rows[{i}] is not an array")))?;
        if row.len() != n {
            return Err(at(format!("rows[{i}] has {} entries, expected {n}", row.len())));
        }
        let mut out = Vec::with_capacity(n);
        for (j, cell) in row.iter().enumerate() {
            let number = cell
                .as_number()
                .ok_or_else(|| at(format!("rows[{i}][{j}] is not a number")))?;
            let text = number.to_string();
            let value = BigInt::from_str(&text)
                .map_err(|_| at(format!("rows[{i}][{j}] is not an integer: {text}")))?;
            out.push(value);
        }
        rows.push(out);
    }
    Ok(IntMatrix::from_rows(rows))
}

/// Accepts either format, sniffing JSON by a leading `{`.
pub fn parse_matrix_auto(input: &str) -> Result<IntMatrix, ParseError> {
    if input.trim_start().starts_with('{') {
        parse_matrix_json(input)
    } else {
        parse_matrix_text(input)
    }
}

/// Canonical text rendering, with trailing newline.
pub fn matrix_to_text(m: &IntMatrix) -> String {
    let mut out = format!("{}\n", m.n());
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// JSON rendering as `{"n": ..., "rows": [[...]]}` with full-precision
/// integer entries.
pub fn matrix_to_json_value(m: &IntMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|x| {
                        Value::Number(
                            Number::from_str(&x.to_string()).expect("decimal integer literal"),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("n".into(), Value::Number(Number::from(m.n() as u64)));
    obj.insert("rows".into(), Value::Array(rows));
    Value::Object(obj)
}
