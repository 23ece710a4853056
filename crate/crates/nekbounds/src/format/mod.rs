//! Matrix file formats.
//!
//! PLAIN: the first token is `n`, followed by `n·n` whitespace-separated
//! scalars in row-major order. A complex scalar is written `a+bi` or `a-bi`
//! with no internal spaces (a bare `bi` is also accepted). If any entry is
//! complex the whole matrix is complex.
//!
//! Matrix Market: `%%MatrixMarket matrix (array|coordinate) (real|integer|complex) general`.

use std::fmt;
use std::path::Path;

use nekrasov_core::{Entries, SquareMatrix};
use thiserror::Error;

mod matrix_market;
mod plain;

pub use matrix_market::parse_matrix_market;
pub use plain::{parse_plain, render_plain};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Plain,
    MatrixMarket,
}

impl InputFormat {
    /// Matrix Market when the first line carries its banner, PLAIN otherwise.
    pub fn detect(text: &str) -> Self {
        if text.trim_start().starts_with("%%MatrixMarket") {
            InputFormat::MatrixMarket
        } else {
            InputFormat::Plain
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    MalformedToken(String),
    InvalidDimension(String),
    NonSquare { rows: usize, cols: usize },
    NonFinite(String),
    MissingEntries { expected: usize, found: usize },
    TrailingData(String),
    BadHeader(String),
    IndexOutOfRange { index: usize, n: usize },
    DuplicateEntry { row: usize, col: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty input"),
            ParseErrorKind::MalformedToken(t) => write!(f, "malformed scalar `{t}`"),
            ParseErrorKind::InvalidDimension(t) => write!(f, "invalid dimension `{t}`"),
            ParseErrorKind::NonSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected a square matrix")
            }
            ParseErrorKind::NonFinite(t) => write!(f, "non-finite value `{t}`"),
            ParseErrorKind::MissingEntries { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            ParseErrorKind::TrailingData(t) => write!(f, "unexpected trailing data `{t}`"),
            ParseErrorKind::BadHeader(msg) => write!(f, "bad Matrix Market header: {msg}"),
            ParseErrorKind::IndexOutOfRange { index, n } => {
                write!(f, "index {index} outside 1..={n}")
            }
            ParseErrorKind::DuplicateEntry { row, col } => {
                write!(f, "duplicate entry ({row}, {col})")
            }
        }
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

pub fn parse_matrix(text: &str, format: InputFormat) -> Result<SquareMatrix, ParseError> {
    match format {
        InputFormat::Plain => parse_plain(text),
        InputFormat::MatrixMarket => parse_matrix_market(text),
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

/// Reads a matrix file, detecting the format from its first line.
pub fn read_matrix(path: &Path) -> Result<SquareMatrix, ReadError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: display.clone(),
        source,
    })?;
    parse_matrix(&text, InputFormat::detect(&text)).map_err(|source| ReadError::Parse {
        path: display,
        source,
    })
}

/// A whitespace-delimited token with its 1-based position.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }
}

pub(crate) fn tokens_of_line(line: &str, line_no: usize) -> impl Iterator<Item = Token<'_>> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let after = &rest[start..];
        let len = after.find(char::is_whitespace).unwrap_or(after.len());
        let token = Token {
            text: &after[..len],
            line: line_no,
            column: line[..offset + start].chars().count() + 1,
        };
        offset += start + len;
        rest = &after[len..];
        Some(token)
    })
}

/// Position just past the last character of `text`, for end-of-input errors.
pub(crate) fn end_position(text: &str) -> (usize, usize) {
    let line = text.lines().count().max(1);
    let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub(crate) fn parse_real(token: &Token<'_>, text: &str) -> Result<f64, ParseError> {
    // `f64::from_str` accepts "inf"/"nan"; those are malformed here
    if !text.bytes().any(|b| b.is_ascii_digit()) {
        return Err(token.error(ParseErrorKind::MalformedToken(token.text.to_string())));
    }
    let value: f64 = text
        .parse()
        .map_err(|_| token.error(ParseErrorKind::MalformedToken(token.text.to_string())))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(token.error(ParseErrorKind::NonFinite(token.text.to_string())))
    }
}

pub(crate) fn build_matrix(
    n: usize,
    values: Vec<nekrasov_core::Complex64>,
    complex: bool,
) -> SquareMatrix {
    let built = if complex {
        SquareMatrix::from_complex(n, values)
    } else {
        SquareMatrix::from_real(n, values.into_iter().map(|v| v.re).collect())
    };
    // dimensions and finiteness are validated while parsing
    built.expect("parsed matrix is well formed")
}

/// Real entries, or `None` for a complex matrix.
pub fn real_entries(a: &SquareMatrix) -> Option<&[f64]> {
    match a.entries() {
        Entries::Real(v) => Some(v),
        Entries::Complex(_) => None,
    }
}
