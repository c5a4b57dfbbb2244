//! Matrix text format and number formatting.
//!
//! ```text
//! # comment lines start with '#'
//! dim 2
//! 1 0  0 0
//! 0 0  0 0
//! ```
//!
//! After the `dim <d>` header come exactly `d` rows, each holding `2d`
//! numbers: the real and imaginary parts of each entry, row-major. Blank
//! lines and `#` comment lines are skipped anywhere.

use std::fs;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into (1-based column, token) pairs.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty file, expected 'dim <d>' header"))?;
    let head: Vec<(usize, &str)> = tokens(header).collect();
    let dim = match head.as_slice() {
        [(_, "dim"), (col, d)] => d
            .parse::<usize>()
            .ok()
            .filter(|&d| d >= 1)
            .ok_or_else(|| parse_err(hline, *col, format!("invalid dimension '{d}'")))?,
        _ => return Err(parse_err(hline, 1, "expected header 'dim <d>'")),
    };

    let mut data = Vec::with_capacity(dim * dim);
    let mut rows = 0;
    for (lno, line) in lines {
        rows += 1;
        if rows > dim {
            return Err(parse_err(
                lno,
                1,
                format!("dimension mismatch: more than the declared {dim} rows"),
            ));
        }
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        if toks.len() != 2 * dim {
            return Err(parse_err(
                lno,
                1,
                format!(
                    "dimension mismatch: row has {} numbers, expected {} (re im pairs)",
                    toks.len(),
                    2 * dim
                ),
            ));
        }
        let mut vals = [0.0f64; 2];
        for (k, &(col, tok)) in toks.iter().enumerate() {
            let v: f64 = tok
                .parse()
                .map_err(|_| parse_err(lno, col, format!("'{tok}' is not a number")))?;
            if !v.is_finite() {
                return Err(parse_err(lno, col, format!("non-finite value '{tok}'")));
            }
            vals[k % 2] = v;
            if k % 2 == 1 {
                data.push(Complex64::new(vals[0], vals[1]));
            }
        }
    }
    if rows != dim {
        let last = text.lines().count().max(1);
        return Err(parse_err(
            last,
            1,
            format!("dimension mismatch: {rows} rows, declared {dim}"),
        ));
    }
    ComplexMatrix::from_row_major(dim, data)
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

/// Shortest text that parses back to exactly `x` (at most 17 significant digits).
pub fn format_exact(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        "0".to_string()
    } else if (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn format_matrix(m: &ComplexMatrix) -> String {
    let d = m.dim();
    let mut out = format!("dim {d}\n");
    for r in 0..d {
        let row: Vec<String> = (0..d)
            .map(|c| {
                let z = m[(r, c)];
                format!("{} {}", format_exact(z.re), format_exact(z.im))
            })
            .collect();
        out.push_str(&row.join("  "));
        out.push('\n');
    }
    out
}

pub fn write_matrix(path: &Path, m: &ComplexMatrix) -> Result<()> {
    fs::write(path, format_matrix(m)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// `%.{digits}g`-style formatting: `digits` significant digits, trailing
/// zeros trimmed, exponent form outside `[1e-4, 10^digits)`.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("LowerExp always has an exponent");
    let exp: i32 = exp.parse().expect("LowerExp exponent is an integer");
    if exp < -4 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
