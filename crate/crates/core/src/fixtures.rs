//! Published lower-bound witnesses bundled with the crate, and a suite that
//! re-verifies all of them.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::matrix::{emit_color_matrix, parse_color_matrices, parse_color_matrix};
use crate::problem::{parse_problem, ProblemSpec};
use crate::verify::{verify, verify_gr, Verdict, Witness};

const MANIFEST: &str = include_str!("../fixtures/manifest.toml");
const TWO_COLOR: &str = include_str!("../fixtures/two_color.g6");
const MULTICOLOR: &str = include_str!("../fixtures/multicolor.txt");

#[derive(Deserialize)]
struct Manifest {
    fixture: Vec<ManifestEntry>,
}

#[derive(Deserialize)]
struct ManifestEntry {
    id: String,
    problem: String,
    order: usize,
    format: String,
    file: String,
    index: usize,
    claim: String,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Graph6(String),
    /// Matrix text exactly as published.
    Matrix(String),
}

#[derive(Clone, Debug)]
pub struct FixtureRecord {
    pub id: String,
    pub problem: ProblemSpec,
    pub order: usize,
    pub payload: Payload,
    /// The bound the witness establishes, e.g. `R(B2,B8) >= 21`.
    pub claim: String,
    /// Remarks on how the published data is read.
    pub note: Option<String>,
}

impl FixtureRecord {
    pub fn decode(&self) -> Result<Witness> {
        match &self.payload {
            Payload::Graph6(s) => decode_graph6(s.as_bytes()).map(Witness::Graph),
            Payload::Matrix(s) => parse_color_matrix(s).map(Witness::Coloring),
        }
    }
}

/// Split the matrix file into the text of each matrix.
fn matrix_blocks(text: &str) -> Vec<String> {
    text.split("\n\n")
        .map(str::trim)
        .filter(|b| !b.is_empty())
        .map(String::from)
        .collect()
}

/// Every bundled fixture, in manifest order.
pub fn fixtures() -> Result<Vec<FixtureRecord>> {
    let manifest: Manifest = toml::from_str(MANIFEST)
        .map_err(|e| Error::Malformed(format!("fixture manifest: {e}")))?;
    let graph6_lines: Vec<&str> = TWO_COLOR.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let blocks = matrix_blocks(MULTICOLOR);
    manifest
        .fixture
        .into_iter()
        .map(|e| {
            let missing = || Error::NotFound(format!("fixture {} entry {} in {}", e.id, e.index, e.file));
            let payload = match e.format.as_str() {
                "graph6" => Payload::Graph6(graph6_lines.get(e.index).ok_or_else(missing)?.to_string()),
                "matrix" => Payload::Matrix(blocks.get(e.index).ok_or_else(missing)?.clone()),
                other => return Err(Error::Malformed(format!("fixture {}: unknown format `{other}`", e.id))),
            };
            Ok(FixtureRecord {
                problem: parse_problem(&e.problem)?,
                id: e.id,
                order: e.order,
                payload,
                claim: e.claim,
                note: e.note,
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub id: String,
    pub claim: String,
    pub passed: bool,
    /// Why the fixture failed; empty on success.
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct FixtureReport {
    pub outcomes: Vec<FixtureOutcome>,
}

impl FixtureReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.outcomes.len()
    }
}

impl fmt::Display for FixtureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = if o.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<12} {:<20} {:>8.1?}", o.id, o.claim, o.elapsed)?;
            if !o.passed {
                write!(f, "  {}", o.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "{}/{} fixtures verified", self.passed(), self.outcomes.len())
    }
}

fn check_fixture(rec: &FixtureRecord) -> Result<std::result::Result<(), String>> {
    let verdict: Verdict = match (rec.decode()?, &rec.payload) {
        (Witness::Graph(g), Payload::Graph6(text)) => {
            if g.order() != rec.order {
                return Ok(Err(format!("decoded {} vertices, expected {}", g.order(), rec.order)));
            }
            if encode_graph6(&g) != *text {
                return Ok(Err("graph6 re-encoding differs".into()));
            }
            verify(&g, &rec.problem)?
        }
        (Witness::Coloring(mc), _) => {
            if mc.order() != rec.order {
                return Ok(Err(format!("parsed {} vertices, expected {}", mc.order(), rec.order)));
            }
            if parse_color_matrices(&emit_color_matrix(&mc))? != vec![mc.clone()] {
                return Ok(Err("matrix re-emission differs".into()));
            }
            verify_gr(&mc, &rec.problem)?
        }
        _ => unreachable!("payload kind decides the witness kind"),
    };
    Ok(match verdict.violation {
        None => Ok(()),
        Some(v) => Err(format!("contains {v}")),
    })
}

/// Verify every bundled fixture. Decoding or verification errors are
/// reported as failures of that fixture, not of the suite.
pub fn run_fixture_suite() -> Result<FixtureReport> {
    let mut report = FixtureReport::default();
    for rec in fixtures()? {
        let start = Instant::now();
        let (passed, detail) = match check_fixture(&rec) {
            Ok(Ok(())) => (true, String::new()),
            Ok(Err(why)) => (false, why),
            Err(e) => (false, e.to_string()),
        };
        report.outcomes.push(FixtureOutcome {
            id: rec.id,
            claim: rec.claim,
            passed,
            detail,
            elapsed: start.elapsed(),
        });
    }
    Ok(report)
}
