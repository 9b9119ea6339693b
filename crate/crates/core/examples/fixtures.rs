//! Re-verify every bundled published lower-bound witness.

use ramsey_core::fixtures::{fixtures, run_fixture_suite};

fn main() -> ramsey_core::Result<()> {
    for rec in fixtures()? {
        if let Some(note) = &rec.note {
            println!("note on {}: {note}", rec.id);
        }
    }
    let report = run_fixture_suite()?;
    println!("{report}");
    assert!(report.all_passed());
    Ok(())
}
