//! Polycirculant graphs: build from connection sets and run a census.

use ramsey_core::polycirculant::{build, enumerate_census, has_rotation, CensusOptions, PolycirculantSpec};
use ramsey_core::{encode_graph6, parse_problem};

fn main() -> ramsey_core::Result<()> {
    let petersen: PolycirculantSpec = "k=2;m=5;S11=1,4;S22=2,3;S12=0".parse()?;
    let g = build(&petersen)?;
    println!("{petersen} -> {} ({} edges, rotation: {})", encode_graph6(&g), g.edge_count(), has_rotation(&g, 2, 5));

    let spec = parse_problem("B2,B9")?;
    let census = enumerate_census(2, 10, &spec, &CensusOptions::default())?;
    println!("{} classes of 2-polycirculant {spec} witnesses on 20 vertices ({} nodes)", census.count(), census.nodes);
    for (_, s) in &census.witnesses {
        println!("  {s}");
    }
    let stretch = enumerate_census(3, 8, &parse_problem("B2,B10")?, &CensusOptions::default())?;
    println!("{} class of 3-polycirculant B2,B10 witnesses on 24 vertices", stretch.count());
    Ok(())
}
