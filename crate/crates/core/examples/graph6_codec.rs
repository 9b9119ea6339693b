//! Encode and decode graphs in graph6, and catch malformed strings.

use ramsey_core::{decode_graph6, encode_graph6, Graph};

fn main() -> ramsey_core::Result<()> {
    for g in [Graph::cycle(5), Graph::complete(7), Graph::wheel(6), Graph::book(3)] {
        let text = encode_graph6(&g);
        let back = decode_graph6(text.as_bytes())?;
        assert_eq!(back, g);
        println!("{:>2} vertices {:>2} edges  {text}", g.order(), g.edge_count());
    }
    for bad in ["D~", "D~{?", "A`"] {
        println!("{bad:<6} -> {}", decode_graph6(bad.as_bytes()).unwrap_err());
    }
    Ok(())
}
