//! Tabu search for witnesses: a single stepped walk, then parallel workers.

use std::time::Duration;

use ramsey_core::encode_graph6;
use ramsey_core::tabu::{init_state, run_parallel, tabu_step, Limits};
use ramsey_core::{emit_color_matrix, parse_problem};

fn main() -> ramsey_core::Result<()> {
    let spec = parse_problem("B2,B3")?;
    let mut state = init_state(&spec, 10, 1)?;
    println!("{spec} on 10 vertices, start score {}", state.score());
    while !state.score().is_zero() {
        let Some(step) = tabu_step(&mut state)? else { break };
        println!("  recolor {:?} {} -> {}: score {}", step.edge, step.old_color, step.new_color, step.score);
    }
    if state.score().is_zero() {
        println!("witness: {}", encode_graph6(&state.coloring().color_class(1)));
    }

    let gr = parse_problem("GR:3,K4,2")?;
    let limits = Limits { max_steps: None, max_time: Some(Duration::from_secs(60)) };
    let report = |p: &ramsey_core::tabu::Progress| eprintln!("{p}");
    let out = run_parallel(&gr, 9, &[1, 2, 3, 4], &limits, Some(&report))?;
    for (seed, o) in &out.workers {
        println!("seed {seed}: {} steps, best score {}", o.stats.steps, o.stats.best_score);
    }
    if let Some((seed, mc)) = out.witness {
        println!("{gr} witness from seed {seed}:\n{}", emit_color_matrix(&mc));
    }
    Ok(())
}
