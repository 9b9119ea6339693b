//! Bottom-up generation of every witness, one vertex at a time.
//!
//! Each level holds one representative per isomorphism class. A child of a
//! parent on `n` vertices gets vertex `n`, whose edges are decided in order
//! `0, 1, ..., n - 1`. Deciding edge `(n, w)` can only create forbidden copies
//! through that edge, so only those are checked. Two-color levels are
//! deduplicated up to graph isomorphism, colorings up to vertex and color
//! permutation.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::canon::{CanonicalForm, Canonize, MAX_CANON_VERTICES};
use crate::coloring::MultiColoring;
use crate::counting::{color_subsets, has_shape_through_edge};
use crate::error::{Error, Result};
use crate::graph::{pair_index, Graph};
use crate::problem::{ForbiddenShape, ProblemSpec};
use crate::verify::Witness;

/// Graphs constrained while extending: for two-color problems the graph and
/// its complement, for GR problems the union of each `t`-subset of colors.
#[derive(Clone)]
struct Layers {
    graphs: Vec<Graph>,
    /// Bit `c - 1` set when color `c` contributes to the layer.
    masks: Vec<u16>,
    shapes: Vec<ForbiddenShape>,
    colors: u8,
}

impl Layers {
    /// Layers of `parent` with one extra, still isolated vertex.
    fn for_parent(parent: &Witness, spec: &ProblemSpec) -> Result<Self> {
        let grow = |g: &Graph| {
            let mut rows = g.rows().to_vec();
            rows.push(0);
            Graph::from_rows(rows)
        };
        match (*spec, parent) {
            (ProblemSpec::TwoColor { left, right }, Witness::Graph(g)) => Ok(Layers {
                graphs: vec![grow(g)?, grow(&g.complement())?],
                masks: vec![0b01, 0b10],
                shapes: vec![left, right],
                colors: 2,
            }),
            (ProblemSpec::Generalized { r, s, t }, Witness::Coloring(mc)) => {
                let classes = mc.color_classes();
                let masks = color_subsets(r, t);
                let graphs = masks
                    .iter()
                    .map(|&m| grow(&Graph::from_rows(crate::counting::union_rows(&classes, m))?))
                    .collect::<Result<_>>()?;
                Ok(Layers {
                    shapes: vec![ForbiddenShape::Clique(s); masks.len()],
                    graphs,
                    masks,
                    colors: r as u8,
                })
            }
            _ => Err(Error::Input(format!("parent kind does not match {spec}"))),
        }
    }

    fn set(&mut self, u: usize, v: usize, color: u8, present: bool) {
        for (g, &m) in self.graphs.iter_mut().zip(&self.masks) {
            if m >> (color - 1) & 1 == 1 {
                if present {
                    g.add_edge(u, v);
                } else {
                    g.remove_edge(u, v);
                }
            }
        }
    }

    fn creates_shape(&self, u: usize, v: usize, color: u8) -> bool {
        self.graphs
            .iter()
            .zip(&self.masks)
            .zip(&self.shapes)
            .any(|((g, &m), &shape)| m >> (color - 1) & 1 == 1 && has_shape_through_edge(g, u, v, shape))
    }
}

fn extend_rec(layers: &mut Layers, n: usize, w: usize, colors: &mut Vec<u8>, emit: &mut dyn FnMut(&[u8])) {
    if w == n {
        emit(colors);
        return;
    }
    for c in 1..=layers.colors {
        layers.set(n, w, c, true);
        if !layers.creates_shape(n, w, c) {
            colors.push(c);
            extend_rec(layers, n, w + 1, colors, emit);
            colors.pop();
        }
        layers.set(n, w, c, false);
    }
}

/// Call `emit` with the colors of the new vertex's edges (to `0..n` in order)
/// for every valid one-vertex extension of `parent`.
fn for_each_extension(parent: &Witness, spec: &ProblemSpec, emit: &mut dyn FnMut(&[u8])) -> Result<()> {
    let n = parent.order();
    if n + 1 > crate::graph::MAX_VERTICES {
        return Err(Error::Capability(format!("cannot extend past {} vertices", crate::graph::MAX_VERTICES)));
    }
    let mut layers = Layers::for_parent(parent, spec)?;
    extend_rec(&mut layers, n, 0, &mut Vec::with_capacity(n), emit);
    Ok(())
}

fn child_of(parent: &Witness, new_edges: &[u8]) -> Witness {
    let n = parent.order();
    match parent {
        Witness::Graph(g) => {
            let mut rows = g.rows().to_vec();
            rows.push(0);
            let mut child = Graph::from_rows(rows).expect("order checked by caller");
            for (w, _) in new_edges.iter().enumerate().filter(|(_, &c)| c == 1) {
                child.add_edge(n, w);
            }
            Witness::Graph(child)
        }
        Witness::Coloring(mc) => {
            let mut colors = vec![0u8; (n + 1) * n / 2];
            colors[..n * (n - 1) / 2].copy_from_slice(mc.edge_colors());
            for (w, &c) in new_edges.iter().enumerate() {
                colors[pair_index(w, n)] = c;
            }
            Witness::Coloring(
                MultiColoring::from_colors(n + 1, mc.colors_used(), colors).expect("colors in range"),
            )
        }
    }
}

/// Every valid child of `parent` on one more vertex, labeled (not deduplicated).
/// `parent` is assumed valid; only structures through the new vertex are checked.
pub fn extend_one(parent: &Witness, spec: &ProblemSpec) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for_each_extension(parent, spec, &mut |edges| out.push(child_of(parent, edges)))?;
    Ok(out)
}

/// The single-vertex witness a generation starts from.
pub fn seed_witness(spec: &ProblemSpec) -> Witness {
    match spec {
        ProblemSpec::TwoColor { .. } => Witness::Graph(Graph::empty(1)),
        ProblemSpec::Generalized { r, .. } => {
            Witness::Coloring(MultiColoring::from_colors(1, *r, Vec::new()).expect("one vertex"))
        }
    }
}

pub fn canonical_key(w: &Witness) -> Result<CanonicalForm> {
    match w {
        Witness::Graph(g) => g.canonical_form(),
        Witness::Coloring(mc) => mc.canonical_form(),
    }
}

fn decode_key(key: &CanonicalForm) -> Witness {
    key.to_graph()
        .map(Witness::Graph)
        .or_else(|| key.to_coloring().map(Witness::Coloring))
        .expect("keys come from canonical_key")
}

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    /// Keep the representatives of every level, not just the counts.
    pub keep_levels: bool,
    /// Stop when a level would exceed this many classes.
    pub max_level_size: Option<usize>,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            keep_levels: false,
            max_level_size: Some(5_000_000),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenerationLevel {
    pub order: usize,
    pub count: usize,
    /// Canonical representatives, sorted by key, when retained.
    pub members: Option<Vec<Witness>>,
}

#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub spec: ProblemSpec,
    pub levels: Vec<GenerationLevel>,
    /// Why generation stopped before the requested order.
    pub truncated: Option<String>,
}

impl GenerationReport {
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    /// Plain text, one order per row.
    pub fn counts_table(&self) -> String {
        let mut out = format!("{:>3}  {}\n", "n", self.spec);
        for l in &self.levels {
            out.push_str(&format!("{:>3}  {}\n", l.order, l.count));
        }
        if let Some(why) = &self.truncated {
            out.push_str(&format!("truncated: {why}\n"));
        }
        out
    }
}

impl fmt::Display for GenerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.counts_table())
    }
}

/// Isomorphism classes of the children of all `parents`.
pub fn next_level(parents: &[Witness], spec: &ProblemSpec) -> Result<HashSet<CanonicalForm>> {
    parents
        .par_iter()
        .try_fold(HashSet::new, |mut seen, parent| {
            let mut failure = None;
            for_each_extension(parent, spec, &mut |edges| {
                if failure.is_none() {
                    match canonical_key(&child_of(parent, edges)) {
                        Ok(key) => {
                            seen.insert(key);
                        }
                        Err(e) => failure = Some(e),
                    }
                }
            })?;
            failure.map_or(Ok(seen), Err)
        })
        .try_reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return Ok(b.into_iter().chain(a).collect());
            }
            a.extend(b);
            Ok(a)
        })
}

/// Counts of witnesses on `1..=n_max` vertices, up to isomorphism.
pub fn generate_levels(spec: &ProblemSpec, n_max: usize, opts: &GenerateOptions) -> Result<GenerationReport> {
    if n_max == 0 {
        return Err(Error::Input("n_max must be at least 1".into()));
    }
    if n_max > MAX_CANON_VERTICES {
        return Err(Error::Capability(format!(
            "generation is limited to {MAX_CANON_VERTICES} vertices by the canonical form"
        )));
    }
    let mut report = GenerationReport {
        spec: *spec,
        levels: Vec::new(),
        truncated: None,
    };
    let mut frontier = vec![seed_witness(spec)];
    report.levels.push(GenerationLevel {
        order: 1,
        count: 1,
        members: opts.keep_levels.then(|| frontier.clone()),
    });
    for order in 2..=n_max {
        if frontier.is_empty() {
            // no parents, so no children at any larger order
            report.levels.push(GenerationLevel {
                order,
                count: 0,
                members: opts.keep_levels.then(Vec::new),
            });
            continue;
        }
        let keys = next_level(&frontier, spec)?;
        if let Some(cap) = opts.max_level_size {
            if keys.len() > cap {
                report.truncated = Some(format!("order {order} has {} classes, above the cap of {cap}", keys.len()));
                return Ok(report);
            }
        }
        let mut keys: Vec<CanonicalForm> = keys.into_iter().collect();
        keys.sort_unstable();
        frontier = keys.iter().map(decode_key).collect();
        report.levels.push(GenerationLevel {
            order,
            count: frontier.len(),
            members: opts.keep_levels.then(|| frontier.clone()),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    fn counts(text: &str, n: usize) -> Vec<usize> {
        generate_levels(&parse_problem(text).unwrap(), n, &GenerateOptions::default())
            .unwrap()
            .counts()
    }

    #[test]
    fn r33_levels() {
        // graphs on n vertices with no triangle and no independent 3-set
        assert_eq!(counts("K3,K3", 7), [1, 2, 2, 3, 1, 0, 0]);
    }

    #[test]
    fn first_child_level() {
        let spec = parse_problem("K3,K3").unwrap();
        let kids = extend_one(&seed_witness(&spec), &spec).unwrap();
        assert_eq!(kids.len(), 2);
        let gr = parse_problem("GR:3,K4,2").unwrap();
        assert_eq!(extend_one(&seed_witness(&gr), &gr).unwrap().len(), 3);
    }

    #[test]
    fn children_verify() {
        let spec = parse_problem("W5,W5").unwrap();
        let report = generate_levels(&spec, 6, &GenerateOptions { keep_levels: true, ..Default::default() }).unwrap();
        for level in &report.levels {
            for parent in level.members.as_ref().unwrap() {
                for child in extend_one(parent, &spec).unwrap() {
                    assert!(child.verify(&spec).unwrap().valid);
                }
            }
        }
    }

    #[test]
    fn small_table_prefixes() {
        assert_eq!(counts("W5,W7", 5), [1, 2, 4, 11, 31]);
        assert_eq!(counts("B2,B8", 5), [1, 2, 4, 9, 22]);
        assert_eq!(counts("GR:4,K4,3", 5), [1, 1, 3, 7, 11]);
    }

    #[test]
    fn truncation_is_reported() {
        let spec = parse_problem("B2,B8").unwrap();
        let opts = GenerateOptions {
            keep_levels: false,
            max_level_size: Some(5),
        };
        let report = generate_levels(&spec, 6, &opts).unwrap();
        assert!(report.truncated.is_some());
        assert_eq!(report.counts(), [1, 2, 4]);
    }
}
