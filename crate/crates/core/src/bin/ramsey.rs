//! `ramsey`: verify, count, search, generate and enumerate Ramsey witnesses.
//!
//! Exit codes: 0 success, 1 a witness is invalid or a census is empty,
//! 2 unreadable input or bad arguments, 3 a search or enumeration stopped at a
//! limit (steps, time, level size, node budget, or an exhausted tabu walk).

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use ramsey_core::counting::count_shape;
use ramsey_core::fixtures::run_fixture_suite;
use ramsey_core::generate::{generate_levels, GenerateOptions};
use ramsey_core::graph6::decode_graph6_lines;
use ramsey_core::matrix::parse_color_matrices;
use ramsey_core::polycirculant::{enumerate_census, BlockFilter, CensusOptions};
use ramsey_core::tabu::{full_score, run_parallel, Limits, Progress, SearchResult};
use ramsey_core::verify::Witness;
use ramsey_core::{encode_graph6, parse_problem, Error, ProblemSpec};

const OK: u8 = 0;
const INVALID: u8 = 1;
const PARSE: u8 = 2;
const LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "ramsey", version, about = "Lower-bound witnesses for book, wheel, clique and generalized Ramsey numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    ComplementBlocks,
}

#[derive(Subcommand)]
enum Command {
    /// Check witnesses; prints one verdict per input.
    Verify {
        /// e.g. `B2,B8`, `W5,W9`, `K3,K3` or `GR:3,K4,2`
        #[arg(long)]
        problem: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Files to read; standard input when omitted.
        inputs: Vec<PathBuf>,
    },
    /// Print the score (forbidden copies) of each input.
    Count {
        #[arg(long)]
        problem: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        inputs: Vec<PathBuf>,
    },
    /// Tabu search for a witness on `n` vertices.
    Search {
        #[arg(long)]
        problem: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Worker `i` uses seed `seed + i`.
        #[arg(long)]
        seed: Option<u64>,
        /// Refuse to run without an explicit `--seed`.
        #[arg(long)]
        deterministic: bool,
        #[arg(long)]
        max_steps: Option<u64>,
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Write the witness here instead of standard output.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
        /// Report progress on standard error.
        #[arg(long)]
        progress: bool,
    },
    /// Count witnesses on 1..=max-n vertices up to isomorphism.
    Generate {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        max_n: usize,
        /// Write the representatives of order `n` to `DIR/n<n>.txt`.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Stop when a level has more classes than this.
        #[arg(long, default_value_t = 5_000_000)]
        max_level: usize,
    },
    /// Enumerate k-polycirculant witnesses with blocks of size m.
    Polycirc {
        #[arg(long)]
        problem: String,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        /// Search without partial-assignment pruning.
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Write the census here instead of standard output.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Re-verify every bundled published witness.
    Fixtures,
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capability(_) | Error::Overflow(_) => LIMIT,
            Error::NotFound(_) => INVALID,
            _ => PARSE,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(PARSE, e.to_string())
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn problem(text: &str) -> std::result::Result<ProblemSpec, Failure> {
    Ok(parse_problem(text)?)
}

fn read_inputs(inputs: &[PathBuf]) -> std::result::Result<Vec<(String, String)>, Failure> {
    if inputs.is_empty() {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(vec![("-".into(), text)]);
    }
    inputs
        .iter()
        .map(|p| {
            fs::read_to_string(p)
                .map(|t| (p.display().to_string(), t))
                .map_err(|e| Failure(PARSE, format!("{}: {e}", p.display())))
        })
        .collect()
}

/// Every witness in the inputs, labeled `file` or `file#i`.
fn load_witnesses(
    inputs: &[PathBuf],
    format: Format,
    spec: &ProblemSpec,
) -> std::result::Result<Vec<(String, Witness)>, Failure> {
    let mut out = Vec::new();
    for (name, text) in read_inputs(inputs)? {
        let parsed: Vec<Witness> = match format {
            Format::Graph6 => {
                if !spec.is_two_color() {
                    return Err(Failure(PARSE, format!("{spec} needs --format matrix")));
                }
                decode_graph6_lines(&text)
                    .map_err(|e| Failure(PARSE, format!("{name}: {e}")))?
                    .into_iter()
                    .map(Witness::Graph)
                    .collect()
            }
            Format::Matrix => parse_color_matrices(&text)
                .map_err(|e| Failure(PARSE, format!("{name}: {e}")))?
                .into_iter()
                .map(Witness::Coloring)
                .collect(),
        };
        if parsed.is_empty() {
            return Err(Failure(PARSE, format!("{name}: no witnesses")));
        }
        let single = parsed.len() == 1;
        out.extend(parsed.into_iter().enumerate().map(|(i, w)| {
            let label = if single { name.clone() } else { format!("{name}#{i}") };
            (label, w)
        }));
    }
    Ok(out)
}

fn cmd_verify(problem_text: &str, format: Format, inputs: &[PathBuf]) -> Outcome {
    let spec = problem(problem_text)?;
    let mut code = OK;
    for (label, w) in load_witnesses(inputs, format, &spec)? {
        let verdict = w.verify(&spec)?;
        match verdict.violation {
            None => println!("VALID   {label} n={} {spec}", w.order()),
            Some(v) => {
                println!("INVALID {label} n={} {spec}: {v}", w.order());
                code = INVALID;
            }
        }
    }
    Ok(code)
}

fn cmd_count(problem_text: &str, format: Format, inputs: &[PathBuf]) -> Outcome {
    let spec = problem(problem_text)?;
    for (label, w) in load_witnesses(inputs, format, &spec)? {
        match (spec, &w) {
            (ProblemSpec::TwoColor { left, right }, _) => {
                let g = match &w {
                    Witness::Graph(g) => g.clone(),
                    Witness::Coloring(mc) => {
                        if mc.colors_used() != 2 {
                            return Err(Failure(PARSE, format!("{label}: expected a 2-coloring")));
                        }
                        mc.color_class(1)
                    }
                };
                let a = count_shape(&g, left)?;
                let b = count_shape(&g.complement(), right)?;
                println!("{label} {left}={a} {right}(complement)={b} total={}", a.checked_add(b)?);
            }
            (ProblemSpec::Generalized { .. }, Witness::Coloring(mc)) => {
                println!("{label} score={}", full_score(&spec, mc)?);
            }
            _ => unreachable!("graph6 is rejected for GR problems"),
        }
    }
    Ok(OK)
}

fn write_out(path: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure(PARSE, format!("{}: {e}", p.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    problem_text: &str,
    n: usize,
    workers: usize,
    seed: Option<u64>,
    deterministic: bool,
    max_steps: Option<u64>,
    max_seconds: Option<f64>,
    output: Option<&Path>,
    progress: bool,
) -> Outcome {
    let spec = problem(problem_text)?;
    if workers == 0 {
        return Err(Failure(PARSE, "--workers must be at least 1".into()));
    }
    if deterministic && seed.is_none() {
        return Err(Failure(PARSE, "--deterministic requires --seed".into()));
    }
    let max_time = match max_seconds {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(Failure(PARSE, format!("--max-seconds must be a nonnegative number, got {s}")))
        }
        s => s.map(Duration::from_secs_f64),
    };
    let base = seed.unwrap_or(0);
    let seeds: Vec<u64> = (0..workers as u64).map(|i| base.wrapping_add(i)).collect();
    let limits = Limits { max_steps, max_time };
    let report = |p: &Progress| eprintln!("{p}");
    let outcome = run_parallel(&spec, n, &seeds, &limits, progress.then_some(&report as _))?;
    for (seed, o) in &outcome.workers {
        let status = match &o.result {
            SearchResult::Witness(_) => "witness".to_string(),
            SearchResult::Stalled(r) => r.to_string(),
        };
        eprintln!(
            "seed {seed}: {status}, {} steps, best score {}, {} visited, {:.2?}",
            o.stats.steps, o.stats.best_score, o.stats.tabu_size, o.stats.elapsed
        );
    }
    match outcome.witness {
        Some((seed, mc)) => {
            let text = if spec.is_two_color() {
                encode_graph6(&mc.color_class(1)) + "\n"
            } else {
                ramsey_core::emit_color_matrix(&mc)
            };
            write_out(output, &text)?;
            eprintln!("found witness on {n} vertices with seed {seed}");
            Ok(OK)
        }
        None => Ok(LIMIT),
    }
}

fn cmd_generate(problem_text: &str, max_n: usize, dump: Option<&Path>, max_level: usize) -> Outcome {
    let spec = problem(problem_text)?;
    let opts = GenerateOptions {
        keep_levels: dump.is_some(),
        max_level_size: Some(max_level),
    };
    let report = generate_levels(&spec, max_n, &opts)?;
    print!("{}", report.counts_table());
    if let Some(dir) = dump {
        fs::create_dir_all(dir)?;
        for level in &report.levels {
            let mut text = String::new();
            for w in level.members.iter().flatten() {
                text.push_str(&w.to_text());
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                if matches!(w, Witness::Coloring(_)) {
                    text.push('\n');
                }
            }
            fs::write(dir.join(format!("n{}.txt", level.order)), text)?;
        }
    }
    Ok(if report.truncated.is_some() { LIMIT } else { OK })
}

#[allow(clippy::too_many_arguments)]
fn cmd_polycirc(
    problem_text: &str,
    k: usize,
    m: usize,
    filter: Option<Filter>,
    no_prune: bool,
    max_nodes: Option<u64>,
    output: Option<&Path>,
) -> Outcome {
    let spec = problem(problem_text)?;
    let opts = CensusOptions {
        prune: !no_prune,
        filter: match filter {
            Some(Filter::ComplementBlocks) => BlockFilter::ComplementBlocks,
            None => BlockFilter::None,
        },
        max_nodes,
        ..CensusOptions::default()
    };
    let census = enumerate_census(k, m, &spec, &opts)?;
    let mut text = String::new();
    for (g, (_, pspec)) in census.graphs().iter().zip(&census.witnesses) {
        text.push_str(&format!("{} {pspec}\n", encode_graph6(g)));
    }
    write_out(output, &text)?;
    eprintln!(
        "{} nonisomorphic {k}-polycirculant {spec} witnesses on {} vertices ({} nodes{})",
        census.count(),
        k * m,
        census.nodes,
        if census.truncated { ", truncated" } else { "" }
    );
    Ok(if census.truncated {
        LIMIT
    } else if census.count() == 0 {
        INVALID
    } else {
        OK
    })
}

fn cmd_fixtures() -> Outcome {
    let report = run_fixture_suite()?;
    println!("{report}");
    Ok(if report.all_passed() { OK } else { INVALID })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { PARSE } else { OK });
        }
    };
    let outcome = match &cli.command {
        Command::Verify { problem, format, inputs } => cmd_verify(problem, *format, inputs),
        Command::Count { problem, format, inputs } => cmd_count(problem, *format, inputs),
        Command::Search {
            problem,
            n,
            workers,
            seed,
            deterministic,
            max_steps,
            max_seconds,
            output,
            progress,
        } => cmd_search(
            problem,
            *n,
            *workers,
            *seed,
            *deterministic,
            *max_steps,
            *max_seconds,
            output.as_deref(),
            *progress,
        ),
        Command::Generate { problem, max_n, dump, max_level } => {
            cmd_generate(problem, *max_n, dump.as_deref(), *max_level)
        }
        Command::Polycirc { problem, k, m, filter, no_prune, max_nodes, output } => {
            cmd_polycirc(problem, *k, *m, *filter, *no_prune, *max_nodes, output.as_deref())
        }
        Command::Fixtures => cmd_fixtures(),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
