//! Wheels `W_k`: a hub `h` plus a cycle of length `k - 1` inside `N(h)`.
//!
//! Counts are hub-labeled: `Σ_h (number of (k-1)-cycles in G[N(h)])`, each
//! cycle counted once as an edge set.

use super::{signed, Score, Toggle};
use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Graph};

/// Simple paths that start at `start`, continue through `steps` further
/// vertices of `avail`, and end on a vertex adjacent to `close`.
fn count_walks(rows: &[u64], cur: usize, avail: u64, steps: usize, close: u64) -> u128 {
    if steps == 0 {
        return (rows[cur] & close != 0) as u128;
    }
    if (avail.count_ones() as usize) < steps {
        return 0;
    }
    let mut total = 0u128;
    for x in Bits(rows[cur] & avail) {
        total += count_walks(rows, x, avail & !(1 << x), steps - 1, close);
    }
    total
}

/// Cycles of length `len` inside the vertex set `set`.
pub(crate) fn count_cycles(rows: &[u64], set: u64, len: usize) -> u128 {
    let mut total = 0u128;
    for s in Bits(set) {
        let later = set & !low_mask(s + 1);
        total += count_walks(rows, s, later, len - 1, 1 << s);
    }
    total / 2
}

/// Cycles of length `len` inside `set` passing through `x ∈ set`.
pub(crate) fn count_cycles_through(rows: &[u64], set: u64, x: usize, len: usize) -> u128 {
    count_walks(rows, x, set & !(1 << x), len - 1, 1 << x) / 2
}

/// Paths `a -> b` with `edges` edges whose inner vertices lie in `set \ {a, b}`.
pub(crate) fn count_paths(rows: &[u64], set: u64, a: usize, b: usize, edges: usize) -> u128 {
    count_walks(rows, a, set & !(1 << a) & !(1 << b), edges - 1, 1 << b)
}

pub fn count_wheels(g: &Graph, k: usize) -> Result<Score> {
    if k < 4 {
        return Err(Error::Input("wheels need at least 4 vertices".into()));
    }
    let mut total = 0u128;
    for h in 0..g.order() {
        total = total
            .checked_add(count_cycles(g.rows(), g.row(h), k - 1))
            .ok_or(Error::Overflow("counting wheels"))?;
    }
    Ok(Score(total))
}

/// Wheels in `rows` (which must contain the edge `{u, v}`) that use that edge:
/// as a spoke of hub `u` or `v`, or as a rim edge of a hub in `N(u) ∩ N(v)`.
fn wheels_using(rows: &[u64], u: usize, v: usize, k: usize) -> u128 {
    let rim = k - 1;
    let mut total = count_cycles_through(rows, rows[u], v, rim) + count_cycles_through(rows, rows[v], u, rim);
    for h in Bits(rows[u] & rows[v]) {
        total += count_paths(rows, rows[h], u, v, rim - 1);
    }
    total
}

/// Change in `count_wheels(g, k)` from toggling `{u, v}`. Only wheels through
/// both endpoints are enumerated.
pub fn wheel_delta(g: &Graph, u: usize, v: usize, toggle: Toggle, k: usize) -> Result<i128> {
    if k < 4 {
        return Err(Error::Input("wheels need at least 4 vertices".into()));
    }
    match (toggle, g.has_edge(u, v)) {
        (Toggle::Add, false) => {
            let mut rows = g.rows().to_vec();
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            signed(wheels_using(&rows, u, v, k), "counting wheels")
        }
        (Toggle::Remove, true) => Ok(-signed(wheels_using(g.rows(), u, v, k), "counting wheels")?),
        (Toggle::Add, true) => Err(Error::Input(format!("edge ({u}, {v}) already present"))),
        (Toggle::Remove, false) => Err(Error::Input(format!("edge ({u}, {v}) not present"))),
    }
}

/// Wheels of `g` using the present edge `{u, v}`.
pub fn wheels_through_edge(g: &Graph, u: usize, v: usize, k: usize) -> Result<u128> {
    if k < 4 {
        return Err(Error::Input("wheels need at least 4 vertices".into()));
    }
    Ok(if g.has_edge(u, v) {
        wheels_using(g.rows(), u, v, k)
    } else {
        0
    })
}

/// First simple path from `cur` through `steps` vertices of `avail` ending next to `close`.
pub(crate) fn find_walk(rows: &[u64], cur: usize, avail: u64, steps: usize, close: u64, path: &mut Vec<usize>) -> bool {
    if steps == 0 {
        return rows[cur] & close != 0;
    }
    if (avail.count_ones() as usize) < steps {
        return false;
    }
    for x in Bits(rows[cur] & avail) {
        path.push(x);
        if find_walk(rows, x, avail & !(1 << x), steps - 1, close, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// A cycle of length `len` inside `set`, as a vertex sequence.
pub(crate) fn find_cycle(rows: &[u64], set: u64, len: usize) -> Option<Vec<usize>> {
    for s in Bits(set) {
        let mut path = vec![s];
        if find_walk(rows, s, set & !low_mask(s + 1), len - 1, 1 << s, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Some `W_k` of `g` as `(hub, rim in cycle order)`.
pub fn find_wheel(g: &Graph, k: usize) -> Option<(usize, Vec<usize>)> {
    (0..g.order()).find_map(|h| find_cycle(g.rows(), g.row(h), k - 1).map(|rim| (h, rim)))
}

pub(crate) fn has_wheel_through_edge(g: &Graph, u: usize, v: usize, k: usize) -> bool {
    if !g.has_edge(u, v) {
        return false;
    }
    let rows = g.rows();
    let rim = k - 1;
    let mut scratch = Vec::new();
    let mut through = |set: u64, x: usize| {
        scratch.clear();
        find_walk(rows, x, set & !(1 << x), rim - 1, 1 << x, &mut scratch)
    };
    if through(rows[u], v) || through(rows[v], u) {
        return true;
    }
    Bits(rows[u] & rows[v]).any(|h| {
        let mut path = Vec::new();
        find_walk(rows, u, rows[h] & !(1 << u) & !(1 << v), rim - 2, 1 << v, &mut path)
    })
}
