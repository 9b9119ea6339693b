//! `k`-polycirculant graphs: `k` blocks of `m` vertices, with the rotation
//! `(a, i) -> (a, i + 1 mod m)` as an automorphism.
//!
//! Vertex `(a, i)` is numbered `a * m + i`. Within block `a`, `(a, i) ~ (a, j)`
//! iff `j - i mod m ∈ S_aa`; across blocks `a < b`, `(a, i) ~ (b, j)` iff
//! `j - i mod m ∈ S_ab`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::canon::{CanonicalForm, Canonize, MAX_CANON_VERTICES};
use crate::counting::has_shape_through_edge;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::problem::ProblemSpec;
use crate::verify::verify;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolycirculantSpec {
    pub k: usize,
    pub m: usize,
    /// `diag[a]` is `S_aa`, a subset of `1..m` closed under `s -> m - s`.
    pub diag: Vec<Vec<usize>>,
    /// `S_ab` for `a < b`, in the order `(0,1), (0,2), ..., (1,2), ...`.
    pub off: Vec<Vec<usize>>,
}

fn block_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect()
}

impl PolycirculantSpec {
    pub fn order(&self) -> usize {
        self.k * self.m
    }

    pub fn validate(&self) -> Result<()> {
        let (k, m) = (self.k, self.m);
        if k == 0 || m == 0 {
            return Err(Error::Input("k and m must be positive".into()));
        }
        if k * m > MAX_VERTICES {
            return Err(Error::Capability(format!("k*m = {} exceeds {MAX_VERTICES} vertices", k * m)));
        }
        if self.diag.len() != k || self.off.len() != k * (k - 1) / 2 {
            return Err(Error::Input(format!("need {k} diagonal and {} off-diagonal sets", k * (k - 1) / 2)));
        }
        for (a, set) in self.diag.iter().enumerate() {
            for &s in set {
                if s == 0 || s >= m {
                    return Err(Error::Input(format!("S{0}{0} contains {s}, outside 1..{m}", a + 1)));
                }
                if !set.contains(&(m - s)) {
                    return Err(Error::Input(format!("S{0}{0} contains {s} but not {1}", a + 1, m - s)));
                }
            }
        }
        for (set, (a, b)) in self.off.iter().zip(block_pairs(k)) {
            if let Some(&d) = set.iter().find(|&&d| d >= m) {
                return Err(Error::Input(format!("S{}{} contains {d}, outside 0..{m}", a + 1, b + 1)));
            }
        }
        Ok(())
    }
}

/// Realize `spec` as a graph on `k * m` vertices.
pub fn build(spec: &PolycirculantSpec) -> Result<Graph> {
    spec.validate()?;
    let m = spec.m;
    let mut g = Graph::empty(spec.order());
    for (a, set) in spec.diag.iter().enumerate() {
        for &s in set {
            for i in 0..m {
                g.add_edge(a * m + i, a * m + (i + s) % m);
            }
        }
    }
    for (set, (a, b)) in spec.off.iter().zip(block_pairs(spec.k)) {
        for &d in set {
            for i in 0..m {
                g.add_edge(a * m + i, b * m + (i + d) % m);
            }
        }
    }
    Ok(g)
}

/// The rotation on `k` blocks of size `m`, as a vertex permutation.
pub fn rotation(k: usize, m: usize) -> Vec<usize> {
    (0..k * m).map(|v| v / m * m + (v % m + 1) % m).collect()
}

/// Is the rotation an automorphism of `g`? Exact edge-by-edge check.
pub fn has_rotation(g: &Graph, k: usize, m: usize) -> bool {
    if k * m != g.order() {
        return false;
    }
    let rho = rotation(k, m);
    g.edges().all(|(u, v)| g.has_edge(rho[u], rho[v]))
}

fn parse_set(text: &str) -> Result<Vec<usize>> {
    let mut set: Vec<usize> = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Input(format!("`{t}` is not a set element"))))
        .collect::<Result<_>>()?;
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

impl FromStr for PolycirculantSpec {
    type Err = Error;

    /// `k=2;m=10;S11=1,9;S22=2,8;S12=0,3,4`. Omitted sets are empty.
    fn from_str(text: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("`{part}` is not key=value")))?;
            fields.insert(key.trim().to_string(), value.trim().to_string());
        }
        let mut number = |key: &str| -> Result<usize> {
            let v = fields.remove(key).ok_or_else(|| Error::Input(format!("missing `{key}`")))?;
            v.parse().map_err(|_| Error::Input(format!("`{key}={v}` is not a number")))
        };
        let (k, m) = (number("k")?, number("m")?);
        if k > 9 {
            return Err(Error::Capability("at most 9 blocks are supported in text form".into()));
        }
        let mut take = |a: usize, b: usize| -> Result<Vec<usize>> {
            fields.remove(&format!("S{}{}", a + 1, b + 1)).map_or(Ok(Vec::new()), |v| parse_set(&v))
        };
        let diag = (0..k).map(|a| take(a, a)).collect::<Result<_>>()?;
        let off = block_pairs(k).into_iter().map(|(a, b)| take(a, b)).collect::<Result<_>>()?;
        if let Some(key) = fields.keys().next() {
            return Err(Error::Input(format!("unknown field `{key}`")));
        }
        let spec = PolycirculantSpec { k, m, diag, off };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for PolycirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "k={};m={}", self.k, self.m)?;
        for (a, s) in self.diag.iter().enumerate() {
            write!(f, ";S{0}{0}={1}", a + 1, join(s))?;
        }
        for (s, (a, b)) in self.off.iter().zip(block_pairs(self.k)) {
            write!(f, ";S{}{}={}", a + 1, b + 1, join(s))?;
        }
        Ok(())
    }
}

/// An orbit of vertex pairs under the rotation, decided as a unit.
#[derive(Clone, Copy, Debug)]
enum Orbit {
    /// Differences `{s, m - s}` inside block `a`.
    Diag { a: usize, s: usize },
    /// Difference `d` from block `a` to block `b`.
    Off { a: usize, b: usize, d: usize },
}

impl Orbit {
    fn representative(self, m: usize) -> (usize, usize) {
        match self {
            Orbit::Diag { a, s } => (a * m, a * m + s),
            Orbit::Off { a, b, d } => (a * m, b * m + d),
        }
    }

    fn set(self, g: &mut Graph, m: usize, present: bool) {
        for i in 0..m {
            let (u, v) = match self {
                Orbit::Diag { a, s } => (a * m + i, a * m + (i + s) % m),
                Orbit::Off { a, b, d } => (a * m + i, b * m + (i + d) % m),
            };
            if present {
                g.add_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
        }
    }
}

/// Diagonal orbits block by block, then the off-diagonal ones.
fn orbits(k: usize, m: usize) -> Vec<Orbit> {
    let mut out: Vec<Orbit> = (0..k).flat_map(|a| (1..=m / 2).map(move |s| Orbit::Diag { a, s })).collect();
    for (a, b) in block_pairs(k) {
        out.extend((0..m).map(|d| Orbit::Off { a, b, d }));
    }
    out
}

fn spec_from_choices(k: usize, m: usize, orbits: &[Orbit], chosen: &[bool]) -> PolycirculantSpec {
    let mut diag = vec![Vec::new(); k];
    let pairs = block_pairs(k);
    let mut off = vec![Vec::new(); pairs.len()];
    for (o, _) in orbits.iter().zip(chosen).filter(|(_, &c)| c) {
        match *o {
            Orbit::Diag { a, s } => {
                diag[a].push(s);
                if m - s != s {
                    diag[a].push(m - s);
                }
            }
            Orbit::Off { a, b, d } => off[pairs.iter().position(|&p| p == (a, b)).unwrap()].push(d),
        }
    }
    diag.iter_mut().for_each(|s| s.sort_unstable());
    PolycirculantSpec { k, m, diag, off }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BlockFilter {
    #[default]
    None,
    /// Block 1 induces a graph isomorphic to the complement of block 2.
    ComplementBlocks,
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Abandon partial assignments that already contain a forbidden structure.
    pub prune: bool,
    pub filter: BlockFilter,
    /// Stop after visiting this many search nodes.
    pub max_nodes: Option<u64>,
    /// Orbits decided sequentially before the work is split across threads.
    pub split_depth: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            prune: true,
            filter: BlockFilter::None,
            max_nodes: None,
            split_depth: 12,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusResult {
    pub k: usize,
    pub m: usize,
    pub spec: ProblemSpec,
    /// One spec per isomorphism class, sorted by canonical key.
    pub witnesses: Vec<(CanonicalForm, PolycirculantSpec)>,
    pub nodes: u64,
    /// Set when the node budget ran out before the search finished.
    pub truncated: bool,
}

impl CensusResult {
    pub fn count(&self) -> usize {
        self.witnesses.len()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.witnesses.iter().map(|(_, s)| build(s).expect("census specs are valid")).collect()
    }
}

struct Walker<'a> {
    k: usize,
    m: usize,
    spec: &'a ProblemSpec,
    orbits: Vec<Orbit>,
    opts: &'a CensusOptions,
    nodes: &'a AtomicU64,
    stop: &'a AtomicBool,
}

/// Partial assignment: `g` holds chosen orbits, `h` the rejected ones.
#[derive(Clone)]
struct Partial {
    g: Graph,
    h: Graph,
    chosen: Vec<bool>,
}

impl Walker<'_> {
    fn diag_count(&self) -> usize {
        self.k * (self.m / 2)
    }

    fn over_budget(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.opts.max_nodes.is_some_and(|cap| n > cap) {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }

    fn filter_ok(&self, p: &Partial) -> bool {
        match self.opts.filter {
            BlockFilter::None => true,
            BlockFilter::ComplementBlocks => {
                let m = self.m;
                let block = |a: usize| p.g.induced(&(a * m..(a + 1) * m).collect::<Vec<_>>());
                match (block(0).canonical_form(), block(1).complement().canonical_form()) {
                    (Ok(x), Ok(y)) => x == y,
                    _ => false,
                }
            }
        }
    }

    /// Try deciding orbit `idx` as `include`; false if pruned.
    fn decide(&self, p: &mut Partial, idx: usize, include: bool) -> bool {
        let ProblemSpec::TwoColor { left, right } = *self.spec else {
            unreachable!("checked by caller")
        };
        let o = self.orbits[idx];
        let (u, v) = o.representative(self.m);
        let (side, shape) = if include { (&mut p.g, left) } else { (&mut p.h, right) };
        o.set(side, self.m, true);
        if self.opts.prune && has_shape_through_edge(side, u, v, shape) {
            o.set(side, self.m, false);
            return false;
        }
        p.chosen.push(include);
        true
    }

    fn undo(&self, p: &mut Partial, idx: usize) {
        let include = p.chosen.pop().expect("a decision to undo");
        let side = if include { &mut p.g } else { &mut p.h };
        self.orbits[idx].set(side, self.m, false);
    }

    /// Depth-first from `p` (with `p.chosen.len()` orbits decided), reporting leaves.
    fn walk(&self, p: &mut Partial, leaf: &mut dyn FnMut(&Partial)) {
        if self.over_budget() {
            return;
        }
        let idx = p.chosen.len();
        if idx == self.diag_count() && idx < self.orbits.len() && !self.filter_ok(p) {
            return;
        }
        if idx == self.orbits.len() {
            if self.diag_count() == self.orbits.len() && !self.filter_ok(p) {
                return;
            }
            leaf(p);
            return;
        }
        for include in [true, false] {
            if self.decide(p, idx, include) {
                self.walk(p, leaf);
                self.undo(p, idx);
            }
        }
    }

    /// All partial assignments after the first `depth` orbits.
    fn prefixes(&self, p: &mut Partial, depth: usize, out: &mut Vec<Partial>) {
        let idx = p.chosen.len();
        if idx == depth || idx == self.orbits.len() {
            out.push(p.clone());
            return;
        }
        if idx == self.diag_count() && !self.filter_ok(p) {
            return;
        }
        for include in [true, false] {
            if self.decide(p, idx, include) {
                self.prefixes(p, depth, out);
                self.undo(p, idx);
            }
        }
    }

    /// The spec of a leaf if its graph is a genuine witness.
    fn accept(&self, p: &Partial) -> Option<(Graph, PolycirculantSpec)> {
        let ps = spec_from_choices(self.k, self.m, &self.orbits, &p.chosen);
        let g = build(&ps).ok()?;
        debug_assert_eq!(g, p.g);
        verify(&g, self.spec).ok()?.valid.then_some((g, ps))
    }
}

fn check_args(k: usize, m: usize, spec: &ProblemSpec, opts: &CensusOptions) -> Result<()> {
    if !spec.is_two_color() {
        return Err(Error::Input(format!("{spec} is not a two-color problem")));
    }
    if opts.filter == BlockFilter::ComplementBlocks && (k < 2 || m > MAX_CANON_VERTICES) {
        return Err(Error::Input("the complement-blocks filter needs k >= 2 and m <= 32".into()));
    }
    if k == 0 || m < 2 || k * m > MAX_VERTICES {
        return Err(Error::Capability(format!("unsupported block layout k={k}, m={m}")));
    }
    Ok(())
}

fn check_census_args(k: usize, m: usize, spec: &ProblemSpec, opts: &CensusOptions) -> Result<()> {
    check_args(k, m, spec, opts)?;
    if !(1..=3).contains(&k) || m < 2 {
        return Err(Error::Capability(format!("need 1 <= k <= 3 and m >= 2 (got k={k}, m={m})")));
    }
    if k * m > MAX_CANON_VERTICES {
        return Err(Error::Capability(format!(
            "k*m = {} exceeds the canonical-form limit of {MAX_CANON_VERTICES}",
            k * m
        )));
    }
    Ok(())
}

/// Every `k`-polycirculant witness for `spec` with blocks of size `m`, up to isomorphism.
pub fn enumerate_census(k: usize, m: usize, spec: &ProblemSpec, opts: &CensusOptions) -> Result<CensusResult> {
    check_census_args(k, m, spec, opts)?;
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let walker = Walker {
        k,
        m,
        spec,
        orbits: orbits(k, m),
        opts,
        nodes: &nodes,
        stop: &stop,
    };
    let mut root = Partial {
        g: Graph::empty(k * m),
        h: Graph::empty(k * m),
        chosen: Vec::new(),
    };
    let mut starts = Vec::new();
    walker.prefixes(&mut root, opts.split_depth.min(walker.orbits.len()), &mut starts);
    let found: Vec<(CanonicalForm, PolycirculantSpec)> = starts
        .into_par_iter()
        .flat_map_iter(|mut p| {
            let mut local = Vec::new();
            walker.walk(&mut p, &mut |leaf| {
                if let Some((g, ps)) = walker.accept(leaf) {
                    local.push((g.canonical_form().expect("order checked"), ps));
                }
            });
            local
        })
        .collect();
    let mut classes: BTreeMap<CanonicalForm, PolycirculantSpec> = BTreeMap::new();
    for (key, ps) in found {
        // keep the lexicographically least spec per class so runs agree
        classes
            .entry(key)
            .and_modify(|cur| {
                if ps.to_string() < cur.to_string() {
                    *cur = ps.clone();
                }
            })
            .or_insert(ps);
    }
    Ok(CensusResult {
        k,
        m,
        spec: *spec,
        witnesses: classes.into_iter().collect(),
        nodes: nodes.into_inner(),
        truncated: stop.into_inner(),
    })
}

/// First witness in search order, or `None` if the space has none.
pub fn first_witness(k: usize, m: usize, spec: &ProblemSpec, opts: &CensusOptions) -> Result<Option<(Graph, PolycirculantSpec)>> {
    check_args(k, m, spec, opts)?;
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let walker = Walker {
        k,
        m,
        spec,
        orbits: orbits(k, m),
        opts,
        nodes: &nodes,
        stop: &stop,
    };
    let mut root = Partial {
        g: Graph::empty(k * m),
        h: Graph::empty(k * m),
        chosen: Vec::new(),
    };
    let mut hit = None;
    walker.walk(&mut root, &mut |leaf| {
        if hit.is_none() {
            if let Some(found) = walker.accept(leaf) {
                hit = Some(found);
                walker.stop.store(true, Ordering::Relaxed);
            }
        }
    });
    if hit.is_none() && opts.max_nodes.is_some_and(|cap| nodes.into_inner() > cap) {
        return Err(Error::Capability("node budget exhausted before a witness was found".into()));
    }
    Ok(hit)
}

/// A polycirculant graph on `4n - 2` vertices with no `B_{n-1}` whose
/// complement has no `B_n`. Searches two blocks of `2n - 1` vertices, trying
/// complementary diagonal blocks first, then every other block count `k`
/// dividing `4n - 2` in increasing order. For `n = 4` no two-block witness
/// exists and the result has seven blocks of two.
pub fn lemma_witness(n: usize) -> Result<(Graph, PolycirculantSpec)> {
    if n < 2 {
        return Err(Error::Input(format!("need n >= 2, got {n}")));
    }
    let order = 4 * n - 2;
    if order > MAX_VERTICES {
        return Err(Error::Capability(format!("{order} vertices exceeds {MAX_VERTICES}")));
    }
    let spec = ProblemSpec::two_color(
        crate::problem::ForbiddenShape::Book(n - 1),
        crate::problem::ForbiddenShape::Book(n),
    )?;
    let mut attempts = vec![(2, BlockFilter::ComplementBlocks), (2, BlockFilter::None)];
    attempts.extend((3..order / 2 + 1).filter(|k| order.is_multiple_of(*k)).map(|k| (k, BlockFilter::None)));
    for (k, filter) in attempts {
        let opts = CensusOptions {
            filter,
            ..CensusOptions::default()
        };
        if let Some(found) = first_witness(k, order / k, &spec, &opts)? {
            return Ok(found);
        }
    }
    Err(Error::NotFound(format!("no polycirculant witness for {spec} on {order} vertices")))
}
