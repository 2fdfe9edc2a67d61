//! Plain-text encoder files.
//!
//! ```text
//! # comment
//! ring 2 2
//! size 1 2
//! 1+3*d, 1+d
//! ```
//!
//! `ring <p> <r>` and `size <k> <n>` come first, then `k` lines of `n`
//! comma-separated polynomials. `#` starts a comment; blank lines are
//! ignored.

use zpr_codes::{Error, Poly, PolyMatrix, RingSpec};

/// Parses a whole file; errors carry 1-based line and column.
pub fn parse(text: &str) -> Result<PolyMatrix, Error> {
    let mut ring: Option<RingSpec> = None;
    let mut size: Option<(usize, usize)> = None;
    let mut rows: Vec<Vec<Poly>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let col = char_col(content, indent);
        let Some(r) = ring else {
            ring = Some(parse_ring(content, line, col)?);
            continue;
        };
        let Some((k, n)) = size else {
            size = Some(parse_size(content, line, col)?);
            continue;
        };
        if rows.len() == k {
            return Err(parse_error(line, col, format!("unexpected row; size declares {k} rows")));
        }
        let mut row = Vec::with_capacity(n);
        let mut offset = 0;
        for field in content.split(',') {
            row.push(Poly::parse_at(field, r, line, char_col(content, offset))?);
            offset += field.len() + 1;
        }
        if row.len() != n {
            return Err(parse_error(
                line,
                col,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }

    let ring = ring.ok_or_else(|| parse_error(last_line.max(1), 1, "missing 'ring <p> <r>' header".into()))?;
    let (k, _) = size.ok_or_else(|| parse_error(last_line.max(1), 1, "missing 'size <k> <n>' header".into()))?;
    if rows.len() != k {
        return Err(parse_error(
            last_line.max(1),
            1,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    PolyMatrix::from_rows(ring, rows)
}

/// Renders a matrix in the format accepted by [`parse`].
pub fn render(m: &PolyMatrix) -> String {
    let ring = m.ring();
    let mut out = format!("ring {} {}\nsize {} {}\n", ring.p(), ring.r(), m.rows(), m.cols());
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(Poly::to_string).collect();
        out.push_str(&cells.join(", "));
        out.push('\n');
    }
    out
}

fn char_col(s: &str, byte_offset: usize) -> usize {
    s[..byte_offset].chars().count() + 1
}

fn parse_error(line: usize, column: usize, message: String) -> Error {
    Error::Parse { line, column, message }
}

/// Splits a header line into `keyword a b`, returning the two numbers.
fn header_numbers(content: &str, keyword: &str, line: usize, col: usize) -> Result<(u64, u64), Error> {
    let words: Vec<(usize, &str)> = content
        .split_whitespace()
        .map(|w| (w.as_ptr() as usize - content.as_ptr() as usize, w))
        .collect();
    if words.first().map(|w| w.1) != Some(keyword) {
        return Err(parse_error(line, col, format!("expected '{keyword}' header")));
    }
    if words.len() != 3 {
        return Err(parse_error(line, col, format!("'{keyword}' takes exactly two integers")));
    }
    let num = |(off, w): (usize, &str)| {
        w.parse::<u64>()
            .map_err(|_| parse_error(line, char_col(content, off), format!("invalid integer '{w}'")))
    };
    Ok((num(words[1])?, num(words[2])?))
}

fn parse_ring(content: &str, line: usize, col: usize) -> Result<RingSpec, Error> {
    let (p, r) = header_numbers(content, "ring", line, col)?;
    let r = u32::try_from(r).map_err(|_| parse_error(line, col, "exponent too large".into()))?;
    RingSpec::new(p, r).map_err(|e| parse_error(line, col, e.to_string()))
}

fn parse_size(content: &str, line: usize, col: usize) -> Result<(usize, usize), Error> {
    let (k, n) = header_numbers(content, "size", line, col)?;
    if k == 0 || n == 0 {
        return Err(parse_error(line, col, "size must be at least 1 x 1".into()));
    }
    Ok((k as usize, n as usize))
}
