//! Count witnesses of every order up to isomorphism by adding one vertex at a time.

use ramsey_core::generate::{generate_levels, GenerateOptions};
use ramsey_core::parse_problem;

fn main() -> ramsey_core::Result<()> {
    for (text, n) in [("K3,K4", 9), ("GR:4,K4,3", 10), ("GR:3,K4,2", 10), ("B2,B8", 7)] {
        let report = generate_levels(&parse_problem(text)?, n, &GenerateOptions::default())?;
        println!("{report}");
    }
    let opts = GenerateOptions { keep_levels: true, ..Default::default() };
    let report = generate_levels(&parse_problem("K3,K3")?, 5, &opts)?;
    let pentagon = &report.levels[4].members.as_ref().unwrap()[0];
    println!("the unique K3,K3 witness on 5 vertices: {}", pentagon.to_text());
    Ok(())
}
