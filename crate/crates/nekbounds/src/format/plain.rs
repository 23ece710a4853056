use std::fmt::Write as _;

use nekrasov_core::{Complex64, Entries, SquareMatrix};

use super::{
    build_matrix, end_position, parse_real, tokens_of_line, ParseError, ParseErrorKind, Token,
};

pub fn parse_plain(text: &str) -> Result<SquareMatrix, ParseError> {
    let mut tokens = text
        .lines()
        .enumerate()
        .flat_map(|(k, line)| tokens_of_line(line, k + 1));

    let first = tokens.next().ok_or_else(|| {
        let (line, column) = end_position(text);
        ParseError {
            line,
            column,
            kind: ParseErrorKind::Empty,
        }
    })?;
    let n: usize = match first.text.parse() {
        Ok(n) if n > 0 => n,
        _ => return Err(first.error(ParseErrorKind::InvalidDimension(first.text.to_string()))),
    };
    let expected = n
        .checked_mul(n)
        .ok_or_else(|| first.error(ParseErrorKind::InvalidDimension(first.text.to_string())))?;

    let mut values = Vec::with_capacity(expected.min(1 << 20));
    let mut complex = false;
    for token in tokens.by_ref().take(expected) {
        let (value, is_complex) = parse_scalar(&token)?;
        complex |= is_complex;
        values.push(value);
    }
    if values.len() < expected {
        let (line, column) = end_position(text);
        return Err(ParseError {
            line,
            column,
            kind: ParseErrorKind::MissingEntries {
                expected,
                found: values.len(),
            },
        });
    }
    if let Some(extra) = tokens.next() {
        return Err(extra.error(ParseErrorKind::TrailingData(extra.text.to_string())));
    }
    Ok(build_matrix(n, values, complex))
}

/// Parses `a`, `a+bi`, `a-bi` or `bi`; the flag reports an imaginary part.
fn parse_scalar(token: &Token<'_>) -> Result<(Complex64, bool), ParseError> {
    let Some(body) = token.text.strip_suffix('i') else {
        return Ok((Complex64::new(parse_real(token, token.text)?, 0.0), false));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (
            parse_real(token, &body[..k])?,
            parse_real(token, &body[k..])?,
        ),
        None => (0.0, parse_real(token, body)?),
    };
    Ok((Complex64::new(re, im), true))
}

/// Renders in PLAIN format. Uses shortest round-trip formatting, so parsing
/// the output reproduces every entry bit for bit.
pub fn render_plain(a: &SquareMatrix) -> String {
    let n = a.dim();
    let mut out = format!("{n}\n");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            match a.entries() {
                Entries::Real(v) => write!(out, "{}", v[i * n + j]),
                Entries::Complex(v) => {
                    let z = v[i * n + j];
                    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                    write!(out, "{}{}{}i", z.re, sign, z.im.abs())
                }
            }
            .expect("writing to a String cannot fail");
        }
        out.push('\n');
    }
    out
}
