mod common;

use common::random_graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_core::fixtures::{fixtures, Payload};
use ramsey_core::graph6::decode_graph6_lines;
use ramsey_core::matrix::parse_color_matrices;
use ramsey_core::{decode_graph6, emit_color_matrix, encode_graph6, parse_color_matrix, Error, Graph, MultiColoring};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=64).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        let text = encode_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn matrix_round_trip(n in 2usize..=20, r in 2usize..=8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut colors: Vec<u8> = (0..n * (n - 1) / 2).map(|_| rng.random_range(1..=r as u8)).collect();
        colors[0] = r as u8; // the parser infers r from the largest entry
        let mc = MultiColoring::from_colors(n, r, colors).unwrap();
        prop_assert_eq!(parse_color_matrix(&emit_color_matrix(&mc)).unwrap(), mc);
    }
}

#[test]
fn ten_thousand_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=64);
        let p = rng.random_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let text = encode_graph6(&g);
        assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
        assert_eq!(encode_graph6(&decode_graph6(text.as_bytes()).unwrap()), text);
    }
}

#[test]
fn fixture_strings_are_byte_exact() {
    for rec in fixtures().unwrap() {
        match &rec.payload {
            Payload::Graph6(text) => {
                let g = decode_graph6(text.as_bytes()).unwrap();
                assert_eq!(g.order(), rec.order, "{}", rec.id);
                assert_eq!(&encode_graph6(&g), text, "{}", rec.id);
            }
            Payload::Matrix(text) => {
                let mc = parse_color_matrix(text).unwrap();
                assert_eq!(mc.order(), rec.order, "{}", rec.id);
                assert_eq!(parse_color_matrix(&emit_color_matrix(&mc)).unwrap(), mc);
            }
        }
    }
}

#[test]
fn known_strings() {
    assert_eq!(encode_graph6(&Graph::complete(5)), "D~{");
    assert_eq!(encode_graph6(&Graph::cycle(5)), "Dhc");
    assert_eq!(encode_graph6(&Graph::empty(1)), "@");
    let g = decode_graph6(b">>graph6<<A_").unwrap();
    assert!(g.has_edge(0, 1));
}

#[test]
fn malformed_graph6_is_rejected_with_a_reason() {
    let cases: [&[u8]; 7] = [b"", b"D~", b"D~{?", b"D~\x7f", b"D~ ", b"A`", b"~??"];
    for bad in cases {
        let err = decode_graph6(bad).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)), "{bad:?}: {err}");
        assert!(!err.to_string().is_empty());
    }
    assert!(matches!(decode_graph6(b"~?A?").unwrap_err(), Error::Capability(_)));
    assert!(decode_graph6_lines("D~{\nnot graph6\n").is_err());
}

#[test]
fn malformed_matrices_are_rejected() {
    for bad in [
        "[[0,1] [2,0]]",
        "[[1,1] [1,0]]",
        "[[0,1,1] [1,0]]",
        "[[0,x] [x,0]]",
        "[[0,1] [1,0]",
        "[[0,9] [9,0]]",
        "0 1\n1 0 1",
    ] {
        assert!(parse_color_matrices(bad).is_err(), "{bad}");
    }
    assert_eq!(parse_color_matrices("0 2\n2 0\n\n0 1\n1 0\n").unwrap().len(), 2);
}
