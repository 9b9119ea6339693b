//! Edge colorings of complete graphs.

use crate::error::{Error, Result};
use crate::graph::{pair_index, Graph, MAX_VERTICES};

/// Most colors a [`MultiColoring`] may use.
pub const MAX_COLORS: usize = 8;

/// An `r`-edge-coloring of `K_n`. Colors are `1..=r`; the edge colors are stored
/// as a flat upper-triangle array indexed by [`pair_index`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiColoring {
    n: usize,
    r: usize,
    colors: Vec<u8>,
}

impl MultiColoring {
    /// Every edge colored `1`.
    pub fn monochromatic(n: usize, r: usize) -> Result<Self> {
        Self::check_bounds(n, r)?;
        Ok(MultiColoring {
            n,
            r,
            colors: vec![1; n * n.saturating_sub(1) / 2],
        })
    }

    /// From a column-ordered edge color vector.
    pub fn from_colors(n: usize, r: usize, colors: Vec<u8>) -> Result<Self> {
        Self::check_bounds(n, r)?;
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Input(format!(
                "expected {} edge colors for n={n}, got {}",
                n * n.saturating_sub(1) / 2,
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c as usize > r) {
            return Err(Error::Input(format!("color {c} outside 1..={r}")));
        }
        Ok(MultiColoring { n, r, colors })
    }

    /// Two-coloring where the edges of `g` get color 1 and its non-edges color 2.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let mut colors = vec![2u8; n * n.saturating_sub(1) / 2];
        for (u, v) in g.edges() {
            colors[pair_index(u, v)] = 1;
        }
        MultiColoring { n, r: 2, colors }
    }

    fn check_bounds(n: usize, r: usize) -> Result<()> {
        if n > MAX_VERTICES {
            return Err(Error::Capability(format!(
                "colorings are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        if r == 0 || r > MAX_COLORS {
            return Err(Error::Capability(format!(
                "color count must be in 1..={MAX_COLORS}, got {r}"
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn colors_used(&self) -> usize {
        self.r
    }

    /// Column-ordered edge color vector.
    #[inline]
    pub fn edge_colors(&self) -> &[u8] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> u8 {
        self.colors[pair_index(u, v)]
    }

    #[inline]
    pub fn color_at(&self, edge: usize) -> u8 {
        self.colors[edge]
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: u8) {
        assert!(c >= 1 && c as usize <= self.r, "color {c} outside 1..={}", self.r);
        self.colors[pair_index(u, v)] = c;
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    /// The graph formed by the edges of color `c`.
    pub fn color_class(&self, c: u8) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 1..self.n {
            for u in 0..v {
                if self.colors[pair_index(u, v)] == c {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// All color classes, index `i` holding color `i + 1`.
    pub fn color_classes(&self) -> Vec<Graph> {
        (1..=self.r as u8).map(|c| self.color_class(c)).collect()
    }

    /// Apply `perm` to the colors: an edge of color `c` gets color `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[u8]) -> MultiColoring {
        assert_eq!(perm.len(), self.r);
        MultiColoring {
            n: self.n,
            r: self.r,
            colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
        }
    }

    /// Coloring in which vertex `perm[v]` plays the role of `v` in `self`.
    pub fn relabel(&self, perm: &[usize]) -> MultiColoring {
        assert_eq!(perm.len(), self.n);
        let mut colors = vec![0u8; self.colors.len()];
        for v in 1..self.n {
            for u in 0..v {
                colors[pair_index(perm[u], perm[v])] = self.colors[pair_index(u, v)];
            }
        }
        MultiColoring {
            n: self.n,
            r: self.r,
            colors,
        }
    }

    /// Restriction to `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> MultiColoring {
        let k = vertices.len();
        let mut colors = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for j in 1..k {
            for i in 0..j {
                colors.push(self.color(vertices[i], vertices[j]));
            }
        }
        MultiColoring {
            n: k,
            r: self.r,
            colors,
        }
    }

    pub fn remove_vertex(&self, v: usize) -> MultiColoring {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_partition_the_edges() {
        let colors = vec![1, 2, 3, 1, 2, 3];
        let mc = MultiColoring::from_colors(4, 3, colors).unwrap();
        let classes = mc.color_classes();
        let total: usize = classes.iter().map(Graph::edge_count).sum();
        assert_eq!(total, 6);
        for v in 1..4 {
            for u in 0..v {
                let owners = classes.iter().filter(|g| g.has_edge(u, v)).count();
                assert_eq!(owners, 1);
            }
        }
    }

    #[test]
    fn from_graph_uses_colors_one_and_two() {
        let g = Graph::cycle(5);
        let mc = MultiColoring::from_graph(&g);
        assert_eq!(mc.color_class(1), g);
        assert_eq!(mc.color_class(2), g.complement());
    }

    #[test]
    fn rejects_bad_colors() {
        assert!(MultiColoring::from_colors(3, 2, vec![1, 0, 2]).is_err());
        assert!(MultiColoring::from_colors(3, 2, vec![1, 3, 2]).is_err());
        assert!(MultiColoring::from_colors(3, 2, vec![1, 2]).is_err());
        assert!(MultiColoring::monochromatic(4, 9).is_err());
    }

    #[test]
    fn relabel_moves_colors_with_vertices() {
        let mut mc = MultiColoring::monochromatic(3, 2).unwrap();
        mc.set_color(0, 1, 2);
        let moved = mc.relabel(&[2, 0, 1]);
        assert_eq!(moved.color(2, 0), 2);
        assert_eq!(moved.color(0, 1), 1);
    }
}
