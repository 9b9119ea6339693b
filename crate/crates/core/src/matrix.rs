//! Color-matrix text: `n` rows of `n` integers, zero diagonal, symmetric,
//! off-diagonal entries are edge colors `1..=r`.
//!
//! Both the bracketed layout (`[[0,2,3] [2,0,1] [3,1,0]]`, rows optionally
//! comma separated) and bare comma/whitespace separated rows are accepted.

use crate::coloring::{MultiColoring, MAX_COLORS};
use crate::error::{Error, Result};
use crate::graph::{pair_index, MAX_VERTICES};

fn parse_row(text: &str, row: usize) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().map_err(|_| {
                Error::Malformed(format!("row {row}: `{t}` is not a nonnegative integer"))
            })
        })
        .collect()
}

/// Innermost bracket groups of `text`, in order.
fn bracket_rows(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut rows = Vec::new();
    let mut open: Option<String> = None;
    for ch in text.chars() {
        match ch {
            '[' => open = Some(String::new()),
            ']' => {
                if let Some(body) = open.take() {
                    rows.push(parse_row(&body, rows.len())?);
                }
            }
            c => match open.as_mut() {
                Some(body) => body.push(c),
                None if c == ',' || c.is_whitespace() => {}
                None => {
                    return Err(Error::Malformed(format!(
                        "unexpected `{c}` between matrix rows"
                    )))
                }
            },
        }
    }
    if open.is_some() {
        return Err(Error::Malformed("unterminated matrix row".into()));
    }
    Ok(rows)
}

fn rows_to_coloring(rows: Vec<Vec<u32>>) -> Result<MultiColoring> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Malformed("empty matrix".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capability(format!(
            "matrix has {n} rows; at most {MAX_VERTICES} are supported"
        )));
    }
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Malformed(format!(
            "ragged matrix: row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    let mut colors = vec![0u8; n * (n - 1) / 2];
    let mut max = 0u32;
    for i in 0..n {
        if rows[i][i] != 0 {
            return Err(Error::Malformed(format!("nonzero diagonal entry at row {i}")));
        }
        for j in i + 1..n {
            let (a, b) = (rows[i][j], rows[j][i]);
            if a != b {
                return Err(Error::Malformed(format!(
                    "asymmetric matrix: entry ({i},{j}) = {a} but ({j},{i}) = {b}"
                )));
            }
            if a == 0 {
                return Err(Error::Malformed(format!("uncolored edge ({i},{j})")));
            }
            if a as usize > MAX_COLORS {
                return Err(Error::Capability(format!(
                    "color {a} at ({i},{j}); at most {MAX_COLORS} colors are supported"
                )));
            }
            max = max.max(a);
            colors[pair_index(i, j)] = a as u8;
        }
    }
    MultiColoring::from_colors(n, max.max(1) as usize, colors)
}

/// Parse a single color matrix. The color count is the largest entry.
pub fn parse_color_matrix(text: &str) -> Result<MultiColoring> {
    let mut all = parse_color_matrices(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Malformed("no matrix found".into())),
        k => Err(Error::Malformed(format!("expected one matrix, found {k}"))),
    }
}

/// Parse every matrix in `text`. Bracketed matrices are delimited by their
/// outermost brackets; bare matrices by blank lines.
pub fn parse_color_matrices(text: &str) -> Result<Vec<MultiColoring>> {
    if text.contains('[') {
        let mut blocks = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, ch) in text.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = i;
                    }
                    depth += 1;
                }
                ']' => {
                    depth = depth.checked_sub(1).ok_or_else(|| {
                        Error::Malformed("unbalanced `]` in matrix text".into())
                    })?;
                    if depth == 0 {
                        blocks.push(&text[start..=i]);
                    }
                }
                c if depth == 0 && !(c == ',' || c.is_whitespace()) => {
                    return Err(Error::Malformed(format!("unexpected `{c}` outside a matrix")))
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Malformed("unbalanced `[` in matrix text".into()));
        }
        blocks
            .into_iter()
            .map(|b| rows_to_coloring(bracket_rows(b)?))
            .collect()
    } else {
        let mut out = Vec::new();
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() {
                if !rows.is_empty() {
                    out.push(rows_to_coloring(std::mem::take(&mut rows))?);
                }
                continue;
            }
            rows.push(parse_row(line, rows.len())?);
        }
        if !rows.is_empty() {
            out.push(rows_to_coloring(rows)?);
        }
        Ok(out)
    }
}

/// Emit `mc` in the bracketed layout, one row per line.
pub fn emit_color_matrix(mc: &MultiColoring) -> String {
    let n = mc.order();
    let mut out = String::with_capacity(n * (2 * n + 4));
    for i in 0..n {
        out.push_str(if i == 0 { "[[" } else { " [" });
        for j in 0..n {
            if j > 0 {
                out.push(',');
            }
            let c = if i == j { 0 } else { mc.color(i, j) };
            out.push_str(&c.to_string());
        }
        out.push(']');
        if i + 1 == n {
            out.push(']');
        }
        out.push('\n');
    }
    out
}
