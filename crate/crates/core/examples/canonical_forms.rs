//! Canonical forms: equal exactly for isomorphic graphs, and for colorings
//! equal up to vertex and color permutation.

use std::collections::HashSet;

use ramsey_core::{Canonize, Graph, MultiColoring};

fn main() -> ramsey_core::Result<()> {
    let c6 = Graph::cycle(6);
    let shuffled = c6.relabel(&[3, 0, 4, 1, 5, 2]);
    println!("C6 and a relabeling share a key: {}", c6.canonical_form()? == shuffled.canonical_form()?);

    // classes of graphs on 5 vertices
    let mut keys = HashSet::new();
    for bits in 0u32..1 << 10 {
        let edges: Vec<(usize, usize)> = (0..5)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        keys.insert(Graph::from_edges(5, &edges).canonical_form()?);
    }
    println!("{} graphs on 5 vertices up to isomorphism", keys.len());

    let a = MultiColoring::from_colors(3, 3, vec![1, 2, 3])?;
    let b = a.permute_colors(&[2, 3, 1]);
    println!("color-permuted colorings share a key: {}", a.canonical_form()? == b.canonical_form()?);
    Ok(())
}
