//! Simple undirected graphs on at most 64 vertices, one `u64` neighbourhood row per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Index of the unordered pair `{u, v}` in column order:
/// `(0,1), (0,2), (1,2), (0,3), ...`, the order graph6 uses for its bit vector.
#[inline]
pub fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(a != b);
    b * (b - 1) / 2 + a
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(idx: usize) -> (usize, usize) {
    let mut b = 1;
    while (b + 1) * b / 2 <= idx {
        b += 1;
    }
    (idx - b * (b - 1) / 2, b)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 64`; use [`Graph::try_empty`] for untrusted sizes.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("vertex count above 64")
    }

    pub fn try_empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capability(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let all = low_mask(n);
        for v in 0..n {
            g.rows[v] = all & !(1 << v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Wheel on `k` vertices: hub `0` joined to a rim cycle `1..k`.
    pub fn wheel(k: usize) -> Self {
        assert!(k >= 4, "a wheel needs at least 4 vertices");
        let mut g = Self::empty(k);
        for i in 1..k {
            g.add_edge(0, i);
            let next = if i + 1 == k { 1 } else { i + 1 };
            g.add_edge(i, next);
        }
        g
    }

    /// Book with `k` pages: spine `0-1`, pages `2..k+2`.
    pub fn book(k: usize) -> Self {
        let mut g = Self::empty(k + 2);
        g.add_edge(0, 1);
        for p in 2..k + 2 {
            g.add_edge(0, p);
            g.add_edge(1, p);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from neighbourhood rows, validating symmetry and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::Capability(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row >> v & 1 == 1 {
                return Err(Error::Input(format!("row {v} out of range or has a loop")));
            }
            for u in Bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Input(format!("adjacency not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// `|N(u) ∩ N(v)|`.
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        (self.rows[u] & self.rows[v]).count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in column order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| Bits(self.rows[v] & low_mask(v)).map(move |u| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            rows: (0..self.n).map(|v| !self.rows[v] & all & !(1 << v)).collect(),
        }
    }

    /// Graph whose vertex `perm[v]` plays the role of `v` in `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy with vertex `v` deleted and the remaining vertices shifted down.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
