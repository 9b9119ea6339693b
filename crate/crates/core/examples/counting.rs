//! Subgraph counts and single-edge score deltas.

use ramsey_core::counting::{
    book_delta, count_books, count_cliques, count_wheels, gr_delta, gr_score, CodegreeCache, Toggle,
};
use ramsey_core::{Graph, MultiColoring};

fn main() -> ramsey_core::Result<()> {
    let k6 = Graph::complete(6);
    println!("K6: {} triangles, {} B2 books, {} W5 wheels", count_cliques(&k6, 3)?, count_books(&k6, 2)?, count_wheels(&k6, 5)?);

    // removing one edge of K6
    let cache = CodegreeCache::new(&k6);
    let d = book_delta(&k6, &cache, 0, 1, Toggle::Remove, 2)?;
    let mut g = k6.clone();
    g.remove_edge(0, 1);
    println!("delta for removing 0-1: {d}, recount {}", count_books(&g, 2)?);

    // a 3-coloring of K5 and the GR(3, K4, 2) score
    let mut mc = MultiColoring::from_colors(5, 3, vec![1, 2, 3, 1, 2, 3, 1, 2, 3, 1])?;
    let before = gr_score(&mc, 4, 2)?;
    let d = gr_delta(&mc, 0, 1, 2, 4, 2)?;
    mc.set_color(0, 1, 2);
    println!("GR score {before} -> {} (delta {d})", gr_score(&mc, 4, 2)?);
    Ok(())
}
