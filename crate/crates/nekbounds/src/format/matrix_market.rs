use nekrasov_core::{Complex64, SquareMatrix};

use super::{
    build_matrix, end_position, parse_real, tokens_of_line, ParseError, ParseErrorKind, Token,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Array,
    Coordinate,
}

struct Cursor<'a, I> {
    tokens: I,
    text: &'a str,
}

impl<'a, I: Iterator<Item = Token<'a>>> Cursor<'a, I> {
    fn next(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        self.tokens.next().ok_or_else(|| {
            let (line, column) = end_position(self.text);
            ParseError {
                line,
                column,
                kind: ParseErrorKind::MalformedToken(format!("{END} {what}")),
            }
        })
    }

    fn value(&mut self, complex: bool) -> Result<Complex64, ParseError> {
        let re_tok = self.next("value")?;
        let re = parse_real(&re_tok, re_tok.text)?;
        let im = if complex {
            let im_tok = self.next("imaginary part")?;
            parse_real(&im_tok, im_tok.text)?
        } else {
            0.0
        };
        Ok(Complex64::new(re, im))
    }
}

const END: &str = "<end of input>, expected";

pub fn parse_matrix_market(text: &str) -> Result<SquareMatrix, ParseError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (layout, complex) = parse_header(lines.next())?;

    // comments and blank lines may appear anywhere after the banner
    let tokens = lines
        .filter(|(_, l)| !l.trim_start().starts_with('%'))
        .flat_map(|(k, l)| tokens_of_line(l, k));
    let mut cur = Cursor { tokens, text };

    let rows_tok = cur.next("row count")?;
    let rows = parse_size(&rows_tok)?;
    let cols_tok = cur.next("column count")?;
    let cols = parse_size(&cols_tok)?;
    if rows != cols {
        return Err(rows_tok.error(ParseErrorKind::NonSquare { rows, cols }));
    }
    let n = rows;
    let total = n.checked_mul(n).ok_or_else(|| {
        rows_tok.error(ParseErrorKind::InvalidDimension(rows_tok.text.to_string()))
    })?;

    let mut values = vec![Complex64::new(0.0, 0.0); total];
    match layout {
        Layout::Array => {
            // column-major
            for k in 0..total {
                let (i, j) = (k % n, k / n);
                values[i * n + j] = cur.value(complex).map_err(|e| missing(e, total, k))?;
            }
        }
        Layout::Coordinate => {
            let nnz_tok = cur.next("entry count")?;
            let nnz: usize = nnz_tok.text.parse().map_err(|_| {
                nnz_tok.error(ParseErrorKind::InvalidDimension(nnz_tok.text.to_string()))
            })?;
            let mut seen = vec![false; total];
            for k in 0..nnz {
                let i_tok = cur.next("row index").map_err(|e| missing(e, nnz, k))?;
                let j_tok = cur.next("column index")?;
                let (i, j) = (parse_index(&i_tok, n)?, parse_index(&j_tok, n)?);
                let idx = i * n + j;
                if seen[idx] {
                    return Err(i_tok.error(ParseErrorKind::DuplicateEntry {
                        row: i + 1,
                        col: j + 1,
                    }));
                }
                seen[idx] = true;
                values[idx] = cur.value(complex)?;
            }
        }
    }
    if let Some(extra) = cur.tokens.next() {
        return Err(extra.error(ParseErrorKind::TrailingData(extra.text.to_string())));
    }
    Ok(build_matrix(n, values, complex))
}

fn missing(e: ParseError, expected: usize, found: usize) -> ParseError {
    match e.kind {
        ParseErrorKind::MalformedToken(ref t) if t.starts_with(END) => ParseError {
            kind: ParseErrorKind::MissingEntries { expected, found },
            ..e
        },
        _ => e,
    }
}

fn parse_header(first: Option<(usize, &str)>) -> Result<(Layout, bool), ParseError> {
    let (line_no, line) = first.ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Empty,
    })?;
    let toks: Vec<Token<'_>> = tokens_of_line(line, line_no).collect();
    let bad = |tok: Option<&Token<'_>>, msg: String| {
        let column = tok.map_or(line.chars().count() + 1, |t| t.column);
        ParseError {
            line: line_no,
            column,
            kind: ParseErrorKind::BadHeader(msg),
        }
    };
    let field = |k: usize| toks.get(k).map(|t| t.text.to_ascii_lowercase());

    if toks.first().map(|t| t.text) != Some("%%MatrixMarket") {
        return Err(bad(toks.first(), "missing %%MatrixMarket banner".into()));
    }
    if field(1).as_deref() != Some("matrix") {
        return Err(bad(toks.get(1), "object must be `matrix`".into()));
    }
    let layout = match field(2).as_deref() {
        Some("array") => Layout::Array,
        Some("coordinate") => Layout::Coordinate,
        other => {
            return Err(bad(
                toks.get(2),
                format!("unsupported format `{}`", other.unwrap_or("")),
            ))
        }
    };
    let complex = match field(3).as_deref() {
        Some("real") | Some("integer") => false,
        Some("complex") => true,
        other => {
            return Err(bad(
                toks.get(3),
                format!("unsupported field `{}`", other.unwrap_or("")),
            ))
        }
    };
    match field(4).as_deref() {
        Some("general") => {}
        other => {
            return Err(bad(
                toks.get(4),
                format!("unsupported symmetry `{}`", other.unwrap_or("")),
            ))
        }
    }
    if let Some(extra) = toks.get(5) {
        return Err(bad(Some(extra), format!("unexpected `{}`", extra.text)));
    }
    Ok((layout, complex))
}

fn parse_size(tok: &Token<'_>) -> Result<usize, ParseError> {
    match tok.text.parse() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(tok.error(ParseErrorKind::InvalidDimension(tok.text.to_string()))),
    }
}

fn parse_index(tok: &Token<'_>, n: usize) -> Result<usize, ParseError> {
    match tok.text.parse::<usize>() {
        Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
        Ok(k) => Err(tok.error(ParseErrorKind::IndexOutOfRange { index: k, n })),
        Err(_) => Err(tok.error(ParseErrorKind::MalformedToken(tok.text.to_string()))),
    }
}
