//! Witness checking with explicit certificates for failures.

use std::fmt;

use crate::coloring::MultiColoring;
use crate::counting::{color_subsets, find_book, find_clique_in, find_wheel, union_rows};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::problem::{ForbiddenShape, ProblemSpec};

/// Which color class of a two-coloring a violation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The graph itself (color 1).
    Graph,
    /// Its complement (color 2).
    Complement,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Graph => "graph",
            Side::Complement => "complement",
        })
    }
}

/// An embedded forbidden structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Book {
        side: Side,
        spine: (usize, usize),
        pages: Vec<usize>,
    },
    Wheel {
        side: Side,
        hub: usize,
        /// Rim vertices in cycle order.
        rim: Vec<usize>,
    },
    Clique {
        side: Side,
        vertices: Vec<usize>,
    },
    /// A `K_s` of a multicoloring whose edges use only `colors`.
    ColoredClique { vertices: Vec<usize>, colors: Vec<u8> },
}

impl Violation {
    /// Does the structure really occur in `g` (or its complement, per its side)?
    pub fn holds_in(&self, g: &Graph) -> bool {
        let side_graph = |side: &Side| match side {
            Side::Graph => g.clone(),
            Side::Complement => g.complement(),
        };
        let distinct = |vs: &[usize]| {
            let mut s = vs.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len() == vs.len() && vs.iter().all(|&v| v < g.order())
        };
        match self {
            Violation::Book { side, spine, pages } => {
                let h = side_graph(side);
                let mut all = pages.clone();
                all.extend([spine.0, spine.1]);
                distinct(&all)
                    && h.has_edge(spine.0, spine.1)
                    && pages.iter().all(|&p| h.has_edge(p, spine.0) && h.has_edge(p, spine.1))
            }
            Violation::Wheel { side, hub, rim } => {
                let h = side_graph(side);
                let mut all = rim.clone();
                all.push(*hub);
                distinct(&all)
                    && rim.len() >= 3
                    && rim.iter().all(|&x| h.has_edge(*hub, x))
                    && (0..rim.len()).all(|i| h.has_edge(rim[i], rim[(i + 1) % rim.len()]))
            }
            Violation::Clique { side, vertices } => {
                let h = side_graph(side);
                distinct(vertices)
                    && vertices
                        .iter()
                        .enumerate()
                        .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| h.has_edge(a, b)))
            }
            Violation::ColoredClique { .. } => false,
        }
    }

    /// Does this colored clique really occur in `mc` with at most `t` colors?
    pub fn holds_in_coloring(&self, mc: &MultiColoring, t: usize) -> bool {
        let Violation::ColoredClique { vertices, colors } = self else {
            return false;
        };
        let mut seen: Vec<u8> = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                if a == b || a >= mc.order() || b >= mc.order() {
                    return false;
                }
                let c = mc.color(a, b);
                if !seen.contains(&c) {
                    seen.push(c);
                }
            }
        }
        seen.sort_unstable();
        let mut claimed = colors.clone();
        claimed.sort_unstable();
        seen.len() <= t && seen == claimed
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Book { side, spine, pages } => write!(
                f,
                "B{} in {side}: spine {}-{}, pages {pages:?}",
                pages.len(),
                spine.0,
                spine.1
            ),
            Violation::Wheel { side, hub, rim } => {
                write!(f, "W{} in {side}: hub {hub}, rim {rim:?}", rim.len() + 1)
            }
            Violation::Clique { side, vertices } => {
                write!(f, "K{} in {side}: vertices {vertices:?}", vertices.len())
            }
            Violation::ColoredClique { vertices, colors } => write!(
                f,
                "K{} with colors {colors:?}: vertices {vertices:?}",
                vertices.len()
            ),
        }
    }
}

/// A candidate witness: a graph for two-color problems, a coloring otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Graph(Graph),
    Coloring(MultiColoring),
}

impl Witness {
    pub fn order(&self) -> usize {
        match self {
            Witness::Graph(g) => g.order(),
            Witness::Coloring(mc) => mc.order(),
        }
    }

    /// graph6 for graphs, the bracketed matrix for colorings.
    pub fn to_text(&self) -> String {
        match self {
            Witness::Graph(g) => crate::graph6::encode_graph6(g),
            Witness::Coloring(mc) => crate::matrix::emit_color_matrix(mc),
        }
    }

    pub fn verify(&self, spec: &ProblemSpec) -> Result<Verdict> {
        match self {
            Witness::Graph(g) => verify(g, spec),
            Witness::Coloring(mc) => verify_coloring(mc, spec),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    fn from(violation: Option<Violation>) -> Self {
        Verdict {
            valid: violation.is_none(),
            violation,
        }
    }
}

/// First copy of `shape` in `g`, labeled with `side`.
pub fn find_shape(g: &Graph, shape: ForbiddenShape, side: Side) -> Option<Violation> {
    match shape {
        ForbiddenShape::Book(k) => find_book(g, k).map(|(spine, pages)| Violation::Book { side, spine, pages }),
        ForbiddenShape::Wheel(k) => find_wheel(g, k).map(|(hub, rim)| Violation::Wheel { side, hub, rim }),
        ForbiddenShape::Clique(k) => {
            find_clique_in(g.rows(), g.vertex_mask(), k).map(|vertices| Violation::Clique { side, vertices })
        }
    }
}

/// Is `g` free of `left` while its complement is free of `right`?
pub fn verify(g: &Graph, spec: &ProblemSpec) -> Result<Verdict> {
    let ProblemSpec::TwoColor { left, right } = *spec else {
        return Err(Error::Input(format!("{spec} is not a two-color problem")));
    };
    if let Some(v) = find_shape(g, left, Side::Graph) {
        return Ok(Verdict::from(Some(v)));
    }
    Ok(Verdict::from(find_shape(&g.complement(), right, Side::Complement)))
}

/// Does every `K_s` of `mc` use more than `t` colors?
pub fn verify_gr(mc: &MultiColoring, spec: &ProblemSpec) -> Result<Verdict> {
    let ProblemSpec::Generalized { r, s, t } = *spec else {
        return Err(Error::Input(format!("{spec} is not a generalized problem")));
    };
    if mc.colors_used() != r {
        return Err(Error::Input(format!(
            "coloring uses {} colors but {spec} needs {r}",
            mc.colors_used()
        )));
    }
    let classes = mc.color_classes();
    let all = mc_vertex_mask(mc);
    for mask in color_subsets(r, t) {
        let rows = union_rows(&classes, mask);
        if let Some(vertices) = find_clique_in(&rows, all, s) {
            let mut colors: Vec<u8> = Vec::new();
            for (i, &a) in vertices.iter().enumerate() {
                for &b in &vertices[i + 1..] {
                    let c = mc.color(a, b);
                    if !colors.contains(&c) {
                        colors.push(c);
                    }
                }
            }
            colors.sort_unstable();
            return Ok(Verdict::from(Some(Violation::ColoredClique { vertices, colors })));
        }
    }
    Ok(Verdict::from(None))
}

/// Verify a coloring against either kind of problem. Two-color problems read
/// color 1 as the graph and require exactly two colors.
pub fn verify_coloring(mc: &MultiColoring, spec: &ProblemSpec) -> Result<Verdict> {
    match spec {
        ProblemSpec::TwoColor { .. } => {
            if mc.colors_used() != 2 {
                return Err(Error::Input(format!(
                    "two-color problem {spec} given a {}-coloring",
                    mc.colors_used()
                )));
            }
            verify(&mc.color_class(1), spec)
        }
        ProblemSpec::Generalized { .. } => verify_gr(mc, spec),
    }
}

fn mc_vertex_mask(mc: &MultiColoring) -> u64 {
    crate::graph::low_mask(mc.order())
}
