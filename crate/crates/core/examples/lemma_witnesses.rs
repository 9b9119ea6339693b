//! Polycirculant graphs on 4n - 2 vertices with no B_{n-1} whose complement has no B_n.

use ramsey_core::polycirculant::lemma_witness;
use ramsey_core::verify::verify;
use ramsey_core::{encode_graph6, ForbiddenShape, ProblemSpec};

fn main() -> ramsey_core::Result<()> {
    for n in 2..=6 {
        let (g, spec) = lemma_witness(n)?;
        let problem = ProblemSpec::two_color(ForbiddenShape::Book(n - 1), ForbiddenShape::Book(n))?;
        assert!(verify(&g, &problem)?.valid);
        println!("n={n}: {} vertices, {spec}\n      {}", g.order(), encode_graph6(&g));
    }
    Ok(())
}
