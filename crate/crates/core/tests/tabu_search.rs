mod common;

use std::time::Duration;

use common::*;
use ramsey_core::tabu::{init_state, run_parallel, run_search, tabu_step, Limits, StallReason, SearchResult};
use ramsey_core::verify::verify_coloring;
use ramsey_core::parse_problem;

fn trace(text: &str, n: usize, seed: u64, steps: usize) -> Vec<((usize, usize), u8, u64)> {
    let spec = parse_problem(text).unwrap();
    let mut state = init_state(&spec, n, seed).unwrap();
    let mut out = Vec::new();
    for _ in 0..steps {
        match tabu_step(&mut state).unwrap() {
            Some(step) => out.push((step.edge, step.new_color, step.hash)),
            None => break,
        }
    }
    out
}

#[test]
fn traces_are_seed_deterministic() {
    for text in ["B2,B3", "W5,K4", "GR:3,K4,2"] {
        assert_eq!(trace(text, 10, 7, 300), trace(text, 10, 7, 300));
        assert_ne!(trace(text, 10, 7, 300), trace(text, 10, 8, 300));
    }
}

#[test]
fn maintained_score_matches_brute_force_every_step() {
    for (text, n) in [("B2,B2", 8), ("W5,W5", 8), ("K3,K4", 8), ("GR:3,K4,2", 8), ("GR:4,K4,3", 7)] {
        let spec = parse_problem(text).unwrap();
        let mut state = init_state(&spec, n, 3).unwrap();
        for _ in 0..200 {
            let expected = match spec {
                ramsey_core::ProblemSpec::TwoColor { left, right } => {
                    let g = state.coloring().color_class(1);
                    naive_shape(&g, left) + naive_shape(&g.complement(), right)
                }
                ramsey_core::ProblemSpec::Generalized { r, s, t } => naive_gr(state.coloring(), r, s, t),
            };
            assert_eq!(state.score().0, expected, "{text} after {} steps", state.steps());
            assert!(state.is_tabu(state.hash()));
            if tabu_step(&mut state).unwrap().is_none() {
                break;
            }
        }
        state.audit().unwrap();
    }
}

#[test]
fn r33_on_five_vertices() {
    let spec = parse_problem("K3,K3").unwrap();
    let found = (0..100)
        .filter(|&seed| {
            let out = run_search(&spec, 5, seed, &Limits::steps(1000)).unwrap();
            out.witness().is_some_and(|mc| naive_valid_coloring(mc, &spec))
        })
        .count();
    assert!(found >= 95, "{found}/100");
}

#[test]
fn impossible_target_stops_without_a_witness() {
    let spec = parse_problem("K3,K3").unwrap();
    let out = run_search(&spec, 6, 1, &Limits::steps(100_000)).unwrap();
    assert!(matches!(
        out.result,
        SearchResult::Stalled(StallReason::Exhausted | StallReason::StepLimit)
    ));
    assert!(out.stats.best_score.0 > 0);
}

#[test]
fn parallel_gr_witness_verifies() {
    let spec = parse_problem("GR:3,K4,2").unwrap();
    let limits = Limits {
        max_steps: None,
        max_time: Some(Duration::from_secs(600)),
    };
    for trial in 0..10u64 {
        let seeds: Vec<u64> = (0..4).map(|i| trial * 4 + i).collect();
        let out = run_parallel(&spec, 9, &seeds, &limits, None).unwrap();
        let (seed, mc) = out.witness.expect("witness");
        assert!(seeds.contains(&seed));
        assert!(verify_coloring(&mc, &spec).unwrap().valid);
        assert!(naive_valid_coloring(&mc, &spec));
    }
}

#[test]
fn bad_seed_lists_are_rejected() {
    let spec = parse_problem("K3,K3").unwrap();
    assert!(run_parallel(&spec, 5, &[], &Limits::steps(10), None).is_err());
    assert!(run_parallel(&spec, 5, &[1, 1], &Limits::steps(10), None).is_err());
}
