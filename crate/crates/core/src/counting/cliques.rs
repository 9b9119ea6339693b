//! Clique counting with pivoting (succinct clique trees).
//!
//! Each root-to-leaf path of the pivot recursion describes a family of cliques
//! `held ∪ S` for every subset `S` of the pivots on that path, and every clique
//! of the graph lies in exactly one such family. The number of `k`-cliques at a
//! leaf is therefore `C(pivots, k - held)`, with no enumeration of the cliques
//! themselves.

use super::{binomial, Score};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

fn pivot_count(rows: &[u64], cand: u64, held: usize, pivots: usize, k: usize) -> Option<u128> {
    if held > k {
        return Some(0);
    }
    if cand == 0 {
        return Some(binomial(pivots, k - held));
    }
    if held + pivots + (cand.count_ones() as usize) < k {
        return Some(0);
    }
    let pivot = Bits(cand)
        .max_by_key(|&p| (rows[p] & cand).count_ones())
        .expect("nonempty candidate set");
    let mut rest = cand;
    let mut total = 0u128;
    for v in Bits(cand & !rows[pivot]) {
        let sub = rest & rows[v];
        let part = if v == pivot {
            pivot_count(rows, sub, held, pivots + 1, k)?
        } else {
            pivot_count(rows, sub, held + 1, pivots, k)?
        };
        total = total.checked_add(part)?;
        rest &= !(1 << v);
    }
    Some(total)
}

/// Number of `k`-cliques inside the vertex set `set`. `k = 0` counts the empty clique.
pub fn count_cliques_in(rows: &[u64], set: u64, k: usize) -> Result<u128> {
    match k {
        0 => Ok(1),
        1 => Ok(set.count_ones() as u128),
        _ => pivot_count(rows, set, 0, 0, k).ok_or(Error::Overflow("counting cliques")),
    }
}

pub fn count_cliques(g: &Graph, s: usize) -> Result<Score> {
    if s < 2 {
        return Err(Error::Input("clique order must be at least 2".into()));
    }
    count_cliques_in(g.rows(), g.vertex_mask(), s).map(Score)
}

/// `s`-cliques that would contain the pair `{u, v}` if it were an edge: the
/// `(s - 2)`-cliques of `N(u) ∩ N(v)`.
pub fn cliques_through_pair(rows: &[u64], u: usize, v: usize, s: usize) -> Result<u128> {
    if s < 2 {
        return Err(Error::Input("clique order must be at least 2".into()));
    }
    count_cliques_in(rows, rows[u] & rows[v], s - 2)
}

/// `s`-cliques of `g` containing the edge `{u, v}`; zero when the edge is absent.
pub fn count_cliques_at_edge(g: &Graph, u: usize, v: usize, s: usize) -> Result<Score> {
    if !g.has_edge(u, v) {
        if s < 2 {
            return Err(Error::Input("clique order must be at least 2".into()));
        }
        return Ok(Score::ZERO);
    }
    cliques_through_pair(g.rows(), u, v, s).map(Score)
}

pub(crate) fn has_clique_in(rows: &[u64], set: u64, k: usize) -> bool {
    let mut scratch = Vec::with_capacity(k);
    find_clique_rec(rows, set, k, &mut scratch)
}

fn find_clique_rec(rows: &[u64], set: u64, k: usize, acc: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    if (set.count_ones() as usize) < k {
        return false;
    }
    let mut rest = set;
    for v in Bits(set) {
        rest &= !(1 << v);
        acc.push(v);
        if find_clique_rec(rows, rest & rows[v], k - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// Some `k`-clique inside `set`, if any.
pub fn find_clique_in(rows: &[u64], set: u64, k: usize) -> Option<Vec<usize>> {
    let mut acc = Vec::with_capacity(k);
    find_clique_rec(rows, set, k, &mut acc).then_some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_give_binomials() {
        for n in 2..=12 {
            let g = Graph::complete(n);
            for s in 2..=n {
                assert_eq!(count_cliques(&g, s).unwrap(), Score(binomial(n, s)));
            }
        }
        assert_eq!(count_cliques(&Graph::complete(5), 3).unwrap(), Score(10));
    }

    #[test]
    fn triangle_free() {
        assert_eq!(count_cliques(&Graph::cycle(5), 3).unwrap(), Score::ZERO);
        assert_eq!(count_cliques(&Graph::cycle(5), 2).unwrap(), Score(5));
    }

    #[test]
    fn edge_rooted() {
        let g = Graph::complete(6);
        assert_eq!(count_cliques_at_edge(&g, 0, 1, 4).unwrap(), Score(binomial(4, 2)));
        let mut h = g.clone();
        h.remove_edge(0, 1);
        assert_eq!(count_cliques_at_edge(&h, 0, 1, 4).unwrap(), Score::ZERO);
        assert_eq!(cliques_through_pair(h.rows(), 0, 1, 4).unwrap(), binomial(4, 2));
    }

    #[test]
    fn finds_cliques() {
        let g = Graph::complete(5);
        let c = find_clique_in(g.rows(), g.vertex_mask(), 4).unwrap();
        assert_eq!(c.len(), 4);
        assert!(find_clique_in(Graph::cycle(6).rows(), 0b111111, 3).is_none());
    }
}
