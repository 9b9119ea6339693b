mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_core::counting::{
    apply_book_toggle, count_books, count_cliques, count_cliques_at_edge, count_shape, count_wheels, gr_delta,
    gr_score, shape_delta, wheel_delta, CodegreeCache, Toggle,
};
use ramsey_core::{ForbiddenShape, Graph};

#[test]
fn books_and_cliques_exhaustive_small() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            for k in 1..=3 {
                assert_eq!(count_books(&g, k).unwrap().0, naive_books(&g, k), "B{k} on {:?}", g.rows());
            }
            for s in 2..=5 {
                assert_eq!(count_cliques(&g, s).unwrap().0, naive_cliques(&g, s), "K{s} on {:?}", g.rows());
            }
        }
    }
}

#[test]
fn wheels_exhaustive_small() {
    for n in 4..=6 {
        for g in all_graphs(n) {
            for k in 4..=n {
                assert_eq!(count_wheels(&g, k).unwrap().0, naive_wheels(&g, k), "W{k} on {:?}", g.rows());
            }
        }
    }
}

#[test]
fn counters_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.random_range(6..=12);
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let k = rng.random_range(1..=4);
        assert_eq!(count_books(&g, k).unwrap().0, naive_books(&g, k));
        let w = rng.random_range(4..=7);
        assert_eq!(count_wheels(&g, w).unwrap().0, naive_wheels(&g, w));
        let s = rng.random_range(2..=5);
        assert_eq!(count_cliques(&g, s).unwrap().0, naive_cliques(&g, s));
    }
}

#[test]
fn gr_score_on_random_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..200 {
        let n = rng.random_range(3..=9);
        let r = rng.random_range(2..=4);
        let s = rng.random_range(3..=4.min(n));
        let t = rng.random_range(1..r.min(s * (s - 1) / 2));
        let mc = random_coloring(&mut rng, n, r);
        assert_eq!(gr_score(&mc, s, t).unwrap().0, naive_gr(&mc, r, s, t), "n={n} r={r} s={s} t={t}");
    }
}

#[test]
fn edge_rooted_cliques_sum_to_total() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.random_range(4..=12);
        let g = random_graph(&mut rng, n, 0.6);
        let s = rng.random_range(2..=5);
        let rooted: u128 = g.edges().map(|(u, v)| count_cliques_at_edge(&g, u, v, s).unwrap().0).sum();
        assert_eq!(rooted, (s * (s - 1) / 2) as u128 * naive_cliques(&g, s));
    }
}

fn random_toggle(rng: &mut ChaCha8Rng, g: &Graph) -> (usize, usize, Toggle) {
    let n = g.order();
    let u = rng.random_range(0..n);
    let mut v = rng.random_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    let toggle = if g.has_edge(u, v) { Toggle::Remove } else { Toggle::Add };
    (u, v, toggle)
}

#[test]
fn book_deltas_match_recounts() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let mut g = random_graph(&mut rng, 12, 0.5);
        let mut cache = CodegreeCache::new(&g);
        let k = rng.random_range(1..=4);
        for _ in 0..100 {
            let before = count_books(&g, k).unwrap();
            let (u, v, toggle) = random_toggle(&mut rng, &g);
            let delta = apply_book_toggle(&mut g, &mut cache, u, v, toggle, k).unwrap();
            assert_eq!(before.apply_delta(delta).unwrap(), count_books(&g, k).unwrap());
            assert!(cache.is_consistent(&g));
        }
    }
}

#[test]
fn wheel_deltas_match_recounts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let n = rng.random_range(7..=10);
        let mut g = random_graph(&mut rng, n, 0.55);
        let k = rng.random_range(4..=7);
        for _ in 0..100 {
            let before = count_wheels(&g, k).unwrap();
            let (u, v, toggle) = random_toggle(&mut rng, &g);
            let delta = wheel_delta(&g, u, v, toggle, k).unwrap();
            g.toggle_edge(u, v);
            assert_eq!(before.apply_delta(delta).unwrap(), count_wheels(&g, k).unwrap());
        }
    }
}

#[test]
fn clique_deltas_match_recounts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let mut g = random_graph(&mut rng, 12, 0.6);
        let shape = ForbiddenShape::Clique(rng.random_range(3..=6));
        for _ in 0..100 {
            let before = count_shape(&g, shape).unwrap();
            let (u, v, toggle) = random_toggle(&mut rng, &g);
            let delta = shape_delta(&g, None, u, v, toggle, shape).unwrap();
            g.toggle_edge(u, v);
            assert_eq!(before.apply_delta(delta).unwrap(), count_shape(&g, shape).unwrap());
        }
    }
}

#[test]
fn gr_deltas_match_recounts() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let n = rng.random_range(5..=9);
        let r = rng.random_range(2..=4);
        let s = rng.random_range(3..=4);
        let t = rng.random_range(1..r.min(s * (s - 1) / 2));
        let mut mc = random_coloring(&mut rng, n, r);
        for _ in 0..100 {
            let before = gr_score(&mc, s, t).unwrap();
            let u = rng.random_range(0..n);
            let v = (u + rng.random_range(1..n)) % n;
            let old = mc.color(u, v);
            let new = (old + rng.random_range(0..r as u8 - 1)) % r as u8 + 1;
            let delta = gr_delta(&mc, u, v, new, s, t).unwrap();
            mc.set_color(u, v, new);
            assert_eq!(before.apply_delta(delta).unwrap(), gr_score(&mc, s, t).unwrap());
        }
    }
}

#[test]
fn adding_edges_never_lowers_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let mut g = random_graph(&mut rng, 10, 0.4);
        let (u, v, toggle) = random_toggle(&mut rng, &g);
        if toggle == Toggle::Remove {
            continue;
        }
        let shapes = [ForbiddenShape::Book(2), ForbiddenShape::Wheel(5), ForbiddenShape::Clique(4)];
        let before: Vec<_> = shapes.iter().map(|&s| count_shape(&g, s).unwrap()).collect();
        g.add_edge(u, v);
        for (&s, b) in shapes.iter().zip(before) {
            assert!(count_shape(&g, s).unwrap() >= b);
        }
    }
}

#[test]
fn named_values() {
    assert_eq!(count_cliques(&Graph::complete(5), 3).unwrap().0, 10);
    assert_eq!(count_cliques(&Graph::cycle(5), 3).unwrap().0, 0);
    assert_eq!(count_books(&Graph::book(3), 3).unwrap().0, 1);
    assert_eq!(count_wheels(&Graph::wheel(6), 6).unwrap().0, 1);
    // every vertex of K5 is a hub over the 3 Hamiltonian cycles of the other four
    assert_eq!(count_wheels(&Graph::complete(5), 5).unwrap().0, 15);
}
