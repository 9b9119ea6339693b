//! The graph6 text encoding used by nauty and friends.
//!
//! A graph6 string is the vertex count `N(n)` followed by the upper-triangle
//! adjacency bits `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six to a byte
//! (most significant first), padded with zeros and offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn printable(b: u8, pos: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Error::Malformed(format!(
            "graph6 byte {b} at offset {pos} outside [63, 126]"
        )))
    }
}

/// Decode one graph6 string (no trailing newline).
pub fn decode_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.strip_prefix(HEADER.as_bytes()).unwrap_or(text);
    let (n, body) = match text {
        [] => return Err(Error::Malformed("empty graph6 string".into())),
        [126, 126, ..] => {
            return Err(Error::Capability(
                "graph6 strings with more than 258047 vertices are not supported".into(),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Malformed("truncated graph6 vertex count".into()));
            }
            let mut n = 0usize;
            for (i, &b) in rest[..3].iter().enumerate() {
                n = n << 6 | printable(b, i + 1)? as usize;
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (printable(*b, 0)? as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capability(format!(
            "graph6 string has {n} vertices; at most {MAX_VERTICES} are supported"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Malformed(format!(
            "truncated graph6: {n} vertices need {need} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Malformed(format!(
            "graph6 has {} trailing bytes after the adjacency data",
            body.len() - need
        )));
    }
    let offset = text.len() - body.len();
    let mut g = Graph::empty(n);
    let (mut u, mut v) = (0usize, 1usize);
    for (i, &b) in body.iter().enumerate() {
        let six = printable(b, offset + i)?;
        for shift in (0..6).rev() {
            let bit = six >> shift & 1 == 1;
            if i * 6 + (5 - shift) >= bits {
                if bit {
                    return Err(Error::Malformed("nonzero graph6 padding bits".into()));
                }
                continue;
            }
            if bit {
                g.add_edge(u, v);
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(g)
}

/// Encode `g` as graph6 (no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decode every non-blank line of `text`, ignoring surrounding whitespace.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| decode_graph6(l.as_bytes()))
        .collect()
}
