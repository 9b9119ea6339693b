//! Check candidate witnesses and print the forbidden subgraph when one exists.

use ramsey_core::verify::{verify, verify_gr};
use ramsey_core::{parse_color_matrix, parse_problem, Graph};

fn main() -> ramsey_core::Result<()> {
    let r33 = parse_problem("K3,K3")?;
    for g in [Graph::cycle(5), Graph::cycle(6)] {
        match verify(&g, &r33)?.violation {
            None => println!("C{} is a witness for {r33}", g.order()),
            Some(v) => println!("C{} fails {r33}: {v}", g.order()),
        }
    }
    let gr = parse_problem("GR:3,K3,2")?;
    let mc = parse_color_matrix("[[0,1,2] [1,0,3] [2,3,0]]")?;
    println!("rainbow triangle under {gr}: valid = {}", verify_gr(&mc, &gr)?.valid);
    let mono = parse_color_matrix("[[0,1,1] [1,0,3] [1,3,0]]")?;
    println!("two-colored triangle under {gr}: {}", verify_gr(&mono, &gr)?.violation.unwrap());
    Ok(())
}
