//! Canonical forms for graphs and for edge colorings up to color permutation.
//!
//! The search is the usual individualization/refinement tree: the ordered
//! partition is refined to an equitable one, the first non-singleton cell is
//! split by individualizing each of its vertices in turn, and every discrete
//! leaf yields a labeled adjacency string. The key is the smallest
//! `(refinement trace, string)` over all leaves. Automorphisms found when two
//! leaves tie prune the remaining search.
//!
//! For colorings, refinement only looks at color-permutation-invariant data
//! and leaf strings rename colors by first occurrence, so the key also
//! quotients out color permutations.

use std::cmp::Ordering;

use crate::coloring::MultiColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hash::avalanche;

/// Largest order accepted by the exact canonical form.
pub const MAX_CANON_VERTICES: usize = 32;

const TAG_GRAPH: u8 = 0;
const TAG_COLORING: u8 = 1;

/// A byte key with equal values exactly for isomorphic inputs. Graph keys and
/// coloring keys never compare equal to each other.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalForm { bytes }
    }

    /// The canonical representative, when this key came from a graph.
    pub fn to_graph(&self) -> Option<Graph> {
        let [TAG_GRAPH, n, _, body @ ..] = self.bytes.as_slice() else {
            return None;
        };
        let n = *n as usize;
        let mut g = Graph::empty(n);
        let mut it = body.iter();
        for v in 1..n {
            for u in 0..v {
                if *it.next()? == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        Some(g)
    }

    /// The canonical representative, when this key came from a coloring.
    pub fn to_coloring(&self) -> Option<MultiColoring> {
        let [TAG_COLORING, n, r, body @ ..] = self.bytes.as_slice() else {
            return None;
        };
        MultiColoring::from_colors(*n as usize, *r as usize, body.to_vec()).ok()
    }
}

/// Things with a canonical form.
pub trait Canonize {
    fn canonical_form(&self) -> Result<CanonicalForm>;
}

impl Canonize for Graph {
    fn canonical_form(&self) -> Result<CanonicalForm> {
        canonical_labeling_graph(self).map(|(key, _)| key)
    }
}

impl Canonize for MultiColoring {
    fn canonical_form(&self) -> Result<CanonicalForm> {
        canonical_labeling_coloring(self).map(|(key, _)| key)
    }
}

/// Canonical key of `g` and the canonical order (`order[p]` is the vertex placed at position `p`).
pub fn canonical_labeling_graph(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = check_order(g.order())?;
    let mut cells = vec![0u8; n * n];
    for (u, v) in g.edges() {
        cells[u * n + v] = 1;
        cells[v * n + u] = 1;
    }
    let m = Matrix {
        n,
        colors: 1,
        permutable: false,
        cells,
    };
    let (string, order) = m.canonical();
    let mut bytes = vec![TAG_GRAPH, n as u8, 0];
    bytes.extend(string);
    Ok((CanonicalForm { bytes }, order))
}

/// Canonical key of `mc` up to vertex and color permutation, plus the canonical vertex order.
pub fn canonical_labeling_coloring(mc: &MultiColoring) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = check_order(mc.order())?;
    let mut cells = vec![0u8; n * n];
    for v in 1..n {
        for u in 0..v {
            let c = mc.color(u, v);
            cells[u * n + v] = c;
            cells[v * n + u] = c;
        }
    }
    let m = Matrix {
        n,
        colors: mc.colors_used(),
        permutable: true,
        cells,
    };
    let (string, order) = m.canonical();
    let mut bytes = vec![TAG_COLORING, n as u8, mc.colors_used() as u8];
    bytes.extend(string);
    Ok((CanonicalForm { bytes }, order))
}

fn check_order(n: usize) -> Result<usize> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::Capability(format!(
            "canonical forms are limited to {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    Ok(n)
}

struct Matrix {
    n: usize,
    /// Colors `1..=colors` are refined on; `0` is the diagonal or, for graphs, a non-edge.
    colors: usize,
    permutable: bool,
    cells: Vec<u8>,
}

type Partition = Vec<Vec<usize>>;

struct Leaf {
    traces: Vec<u64>,
    string: Vec<u8>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    m: &'a Matrix,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Matrix {
    #[inline]
    fn at(&self, u: usize, v: usize) -> u8 {
        self.cells[u * self.n + v]
    }

    /// Color-count profile of `v` against the cells of `p`.
    fn signature(&self, v: usize, cell_of: &[usize], cells: usize) -> Vec<u16> {
        let mut counts = vec![0u16; self.colors * cells];
        for w in 0..self.n {
            let c = self.at(v, w) as usize;
            if w != v && c > 0 {
                counts[(c - 1) * cells + cell_of[w]] += 1;
            }
        }
        if self.permutable && self.colors > 1 {
            let mut chunks: Vec<&[u16]> = counts.chunks(cells).collect();
            chunks.sort_unstable();
            chunks.concat()
        } else {
            counts
        }
    }

    /// Refine `p` to the coarsest equitable refinement; returns a trace hash of the result.
    fn refine(&self, p: &mut Partition) -> u64 {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, cell) in p.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let k = p.len();
            let mut next: Partition = Vec::with_capacity(k);
            let mut trace = 0x243f_6a88_85a3_08d3u64;
            for cell in p.iter() {
                if cell.len() == 1 {
                    let sig = self.signature(cell[0], &cell_of, k);
                    trace = mix_trace(trace, 1, &sig);
                    next.push(cell.clone());
                    continue;
                }
                let mut tagged: Vec<(Vec<u16>, usize)> = cell
                    .iter()
                    .map(|&v| (self.signature(v, &cell_of, k), v))
                    .collect();
                tagged.sort_unstable();
                let mut start = 0;
                for i in 1..=tagged.len() {
                    if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                        trace = mix_trace(trace, (i - start) as u64, &tagged[start].0);
                        next.push(tagged[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == k;
            *p = next;
            if stable {
                return trace;
            }
        }
    }

    fn leaf_string(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut s = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut rename = [0u8; 256];
        let mut next = 1u8;
        for q in 1..n {
            for p in 0..q {
                let c = self.at(order[p], order[q]);
                if self.permutable {
                    if rename[c as usize] == 0 {
                        rename[c as usize] = next;
                        next += 1;
                    }
                    s.push(rename[c as usize]);
                } else {
                    s.push(c);
                }
            }
        }
        s
    }

    fn canonical(&self) -> (Vec<u8>, Vec<usize>) {
        if self.n == 0 {
            return (Vec::new(), Vec::new());
        }
        let mut search = Search {
            m: self,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        };
        let mut root = vec![(0..self.n).collect::<Vec<_>>()];
        let trace = self.refine(&mut root);
        search.visit(root, &mut Vec::new(), &mut vec![trace]);
        let best = search.best.expect("search reaches at least one leaf");
        (best.string, best.order)
    }
}

fn mix_trace(h: u64, size: u64, sig: &[u16]) -> u64 {
    let mut h = avalanche(h ^ size.wrapping_mul(0x100_0000_01b3));
    for &x in sig {
        h = avalanche(h ^ x as u64);
    }
    h
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

impl Search<'_> {
    /// Explore the node with individualized `path`; returns `Some(level)` when
    /// the subtree was shown equivalent to an explored one and the search should
    /// resume at the ancestor with `path.len() == level`.
    fn visit(&mut self, p: Partition, path: &mut Vec<usize>, traces: &mut Vec<u64>) -> Option<usize> {
        if let Some(best) = &self.best {
            let len = traces.len().min(best.traces.len());
            if traces[..len].cmp(&best.traces[..len]) == Ordering::Greater {
                return None;
            }
        }
        if p.len() == self.m.n {
            return self.leaf(p, path, traces);
        }
        let target = p.iter().position(|c| c.len() > 1).expect("non-discrete partition");
        let candidates = p[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !explored.is_empty() && self.same_orbit(path, &explored, w) {
                continue;
            }
            let mut child = Vec::with_capacity(p.len() + 1);
            child.extend_from_slice(&p[..target]);
            child.push(vec![w]);
            child.push(p[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&p[target + 1..]);
            let trace = self.m.refine(&mut child);
            path.push(w);
            traces.push(trace);
            let jump = self.visit(child, path, traces);
            traces.pop();
            path.pop();
            explored.push(w);
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: Partition, path: &[usize], traces: &[u64]) -> Option<usize> {
        let order: Vec<usize> = p.into_iter().map(|c| c[0]).collect();
        let string = self.m.leaf_string(&order);
        let leaf = Leaf {
            traces: traces.to_vec(),
            string,
            order,
            path: path.to_vec(),
        };
        let Some(best) = &self.best else {
            self.first = Some(Leaf {
                traces: leaf.traces.clone(),
                string: leaf.string.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        match (&leaf.traces, &leaf.string).cmp(&(&best.traces, &best.string)) {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Greater => {
                let first = self.first.as_ref().unwrap();
                if (&leaf.traces, &leaf.string) == (&first.traces, &first.string) {
                    self.record_automorphism(first_to(first, &leaf))
                } else {
                    None
                }
            }
            Ordering::Equal => self.record_automorphism(first_to(best, &leaf)),
        }
    }

    fn record_automorphism(&mut self, (gamma, from_path, to_path): (Vec<usize>, Vec<usize>, Vec<usize>)) -> Option<usize> {
        let level = from_path
            .iter()
            .zip(&to_path)
            .take_while(|(a, b)| a == b)
            .count();
        let maps_path = from_path.len() == to_path.len()
            && from_path.iter().zip(&to_path).all(|(&a, &b)| gamma[a] == b);
        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
            self.automorphisms.push(gamma);
        }
        maps_path.then_some(level)
    }

    /// Is `w` in the orbit of an explored vertex under the found automorphisms fixing `path`?
    fn same_orbit(&self, path: &[usize], explored: &[usize], w: usize) -> bool {
        let mut uf: Vec<usize> = (0..self.m.n).collect();
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&x| gamma[x] == x) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut uf, x), find(&mut uf, y));
                    if a != b {
                        uf[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut uf, w);
        explored.iter().any(|&e| find(&mut uf, e) == root)
    }
}

/// The automorphism mapping `from`'s leaf to `to`'s, with both individualization paths.
fn first_to(from: &Leaf, to: &Leaf) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut gamma = vec![0usize; from.order.len()];
    for (&a, &b) in from.order.iter().zip(&to.order) {
        gamma[a] = b;
    }
    (gamma, from.path.clone(), to.path.clone())
}
