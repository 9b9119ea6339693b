//! Brute-force oracles. Deliberately slow and independent of the library's
//! counting code: they only use adjacency queries.

#![allow(dead_code)]

use rand::Rng;
use ramsey_core::{ForbiddenShape, Graph, MultiColoring, ProblemSpec};

/// All `k`-subsets of `items`.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Spine-labeled books: an edge `uv` plus `k` common neighbours.
pub fn naive_books(g: &Graph, k: usize) -> u128 {
    let n = g.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
            total += subsets(&others, k)
                .iter()
                .filter(|pages| pages.iter().all(|&p| g.has_edge(p, u) && g.has_edge(p, v)))
                .count() as u128;
        }
    }
    total
}

/// Hub-labeled wheels: a hub plus an undirected `(k - 1)`-cycle in its neighbourhood.
pub fn naive_wheels(g: &Graph, k: usize) -> u128 {
    let n = g.order();
    let len = k - 1;
    let mut total = 0u128;
    for hub in 0..n {
        let nbrs: Vec<usize> = (0..n).filter(|&v| g.has_edge(hub, v)).collect();
        for set in subsets(&nbrs, len) {
            // cycles on `set` through set[0], each counted in both directions
            let rest = &set[1..];
            let mut directed = 0u128;
            for perm in permutations(rest.len()) {
                let mut order = vec![set[0]];
                order.extend(perm.iter().map(|&i| rest[i]));
                if (0..len).all(|i| g.has_edge(order[i], order[(i + 1) % len])) {
                    directed += 1;
                }
            }
            total += directed / 2;
        }
    }
    total
}

pub fn naive_cliques(g: &Graph, s: usize) -> u128 {
    let all: Vec<usize> = (0..g.order()).collect();
    subsets(&all, s)
        .iter()
        .filter(|set| set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b))))
        .count() as u128
}

fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Each `K_s` with `d <= t` distinct colors, weighted by the `C(r - d, t - d)`
/// color `t`-subsets covering it.
pub fn naive_gr(mc: &MultiColoring, r: usize, s: usize, t: usize) -> u128 {
    let all: Vec<usize> = (0..mc.order()).collect();
    let mut total = 0;
    for set in subsets(&all, s) {
        let mut colors = Vec::new();
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                let c = mc.color(a, b);
                if !colors.contains(&c) {
                    colors.push(c);
                }
            }
        }
        if colors.len() <= t {
            total += choose(r - colors.len(), t - colors.len());
        }
    }
    total
}

pub fn naive_shape(g: &Graph, shape: ForbiddenShape) -> u128 {
    match shape {
        ForbiddenShape::Book(k) => naive_books(g, k),
        ForbiddenShape::Wheel(k) => naive_wheels(g, k),
        ForbiddenShape::Clique(k) => naive_cliques(g, k),
    }
}

/// Witness validity by recounting.
pub fn naive_valid(g: &Graph, spec: &ProblemSpec) -> bool {
    match *spec {
        ProblemSpec::TwoColor { left, right } => {
            naive_shape(g, left) == 0 && naive_shape(&g.complement(), right) == 0
        }
        ProblemSpec::Generalized { .. } => panic!("two-color problems only"),
    }
}

pub fn naive_valid_coloring(mc: &MultiColoring, spec: &ProblemSpec) -> bool {
    match *spec {
        ProblemSpec::Generalized { r, s, t } => naive_gr(mc, r, s, t) == 0,
        ProblemSpec::TwoColor { .. } => naive_valid(&mc.color_class(1), spec),
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_coloring(rng: &mut impl Rng, n: usize, r: usize) -> MultiColoring {
    let colors = (0..n * (n - 1) / 2).map(|_| rng.random_range(1..=r as u8)).collect();
    MultiColoring::from_colors(n, r, colors).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Every labeled `r`-coloring of `K_n`.
pub fn all_colorings(n: usize, r: usize) -> impl Iterator<Item = MultiColoring> {
    let e = n * (n - 1) / 2;
    (0..(r as u64).pow(e as u32)).map(move |mut code| {
        let colors = (0..e)
            .map(|_| {
                let c = (code % r as u64) as u8 + 1;
                code /= r as u64;
                c
            })
            .collect();
        MultiColoring::from_colors(n, r, colors).unwrap()
    })
}

/// Isomorphism by trying every vertex permutation.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && permutations(a.order()).iter().any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

/// Lexicographically least color vector over all vertex and color permutations.
pub fn brute_coloring_key(mc: &MultiColoring) -> Vec<u8> {
    let r = mc.colors_used();
    let color_perms = permutations(r);
    let n = mc.order();
    let mut best: Option<Vec<u8>> = None;
    for p in permutations(n) {
        for cp in &color_perms {
            let mut v = Vec::with_capacity(n * (n - 1) / 2);
            // same upper-triangle order as pair_index: (0,1), (0,2), (1,2), ...
            for j in 1..n {
                for i in 0..j {
                    let c = mc.color(p[i], p[j]);
                    v.push(cp[(c - 1) as usize] as u8 + 1);
                }
            }
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap_or_default()
}

/// Lexicographically least upper-triangle bit vector over all relabelings.
pub fn brute_graph_key(g: &Graph) -> Vec<bool> {
    let n = g.order();
    permutations(n)
        .iter()
        .map(|p| {
            let mut v = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    v.push(g.has_edge(p[i], p[j]));
                }
            }
            v
        })
        .min()
        .unwrap_or_default()
}
