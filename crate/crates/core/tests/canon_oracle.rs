mod common;

use std::collections::{HashMap, HashSet};

use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_core::{CanonicalForm, Canonize, Graph};

/// Two keyings induce the same partition of `items`.
fn same_partition<A, B, T>(items: &[T], a: impl Fn(&T) -> A, b: impl Fn(&T) -> B)
where
    A: std::hash::Hash + Eq + Clone + std::fmt::Debug,
    B: std::hash::Hash + Eq + Clone + std::fmt::Debug,
{
    let mut forward: HashMap<A, B> = HashMap::new();
    let mut backward: HashMap<B, A> = HashMap::new();
    for x in items {
        let (ka, kb) = (a(x), b(x));
        assert_eq!(forward.entry(ka.clone()).or_insert_with(|| kb.clone()), &kb);
        assert_eq!(backward.entry(kb).or_insert(ka.clone()), &ka);
    }
}

#[test]
fn graph_classes_match_brute_force() {
    for n in 1..=5 {
        let graphs: Vec<Graph> = all_graphs(n).collect();
        same_partition(&graphs, |g| g.canonical_form().unwrap(), brute_graph_key);
    }
}

#[test]
fn graph_class_counts() {
    let expected = [1, 2, 4, 11, 34, 156];
    for (n, &want) in (1..=6).zip(&expected) {
        let keys: HashSet<CanonicalForm> = all_graphs(n).map(|g| g.canonical_form().unwrap()).collect();
        assert_eq!(keys.len(), want, "n={n}");
    }
}

#[test]
fn six_vertex_pairs_agree_with_permutation_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..400 {
        let a = random_graph(&mut rng, 6, 0.5);
        let b = if rng.random_bool(0.5) {
            let mut p: Vec<usize> = (0..6).collect();
            p.shuffle(&mut rng);
            a.relabel(&p)
        } else {
            random_graph(&mut rng, 6, 0.5)
        };
        let same = a.canonical_form().unwrap() == b.canonical_form().unwrap();
        assert_eq!(same, brute_isomorphic(&a, &b));
    }
}

#[test]
fn coloring_classes_match_brute_force() {
    for (n, r) in [(3, 3), (4, 2), (4, 3), (5, 2)] {
        let colorings: Vec<_> = all_colorings(n, r).collect();
        same_partition(&colorings, |mc| mc.canonical_form().unwrap(), brute_coloring_key);
    }
}

#[test]
fn invariant_under_relabeling_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.random_range(10..=32);
        let p = rng.random_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        assert_eq!(g.canonical_form().unwrap(), g.relabel(&p).canonical_form().unwrap());
        let key = g.canonical_form().unwrap();
        assert!(brute_free_roundtrip(&key, &g));
    }
    // vertex-transitive graphs stress the automorphism pruning
    for g in [Graph::cycle(31), Graph::complete(20), Graph::empty(25)] {
        let mut p: Vec<usize> = (0..g.order()).collect();
        p.shuffle(&mut rng);
        assert_eq!(g.canonical_form().unwrap(), g.relabel(&p).canonical_form().unwrap());
    }
}

/// The key decodes to a graph in the same class.
fn brute_free_roundtrip(key: &CanonicalForm, g: &Graph) -> bool {
    let h = key.to_graph().unwrap();
    h.order() == g.order() && h.edge_count() == g.edge_count() && h.canonical_form().unwrap() == *key
}

#[test]
fn colorings_invariant_under_color_and_vertex_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let n = rng.random_range(5..=20);
        let r = rng.random_range(2..=4);
        let mc = random_coloring(&mut rng, n, r);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        let mut cp: Vec<u8> = (1..=r as u8).collect();
        cp.shuffle(&mut rng);
        let other = mc.relabel(&p).permute_colors(&cp);
        assert_eq!(mc.canonical_form().unwrap(), other.canonical_form().unwrap());
    }
}
