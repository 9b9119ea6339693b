//! Tabu search over edge colorings.
//!
//! Each step recolors the single edge giving the lowest score among colorings
//! not yet visited. Visited colorings are remembered by their labeled hash in
//! an unbounded set. A run never restarts; it ends on a witness, a limit, or a
//! neighborhood made entirely of visited colorings.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::MultiColoring;
use crate::counting::{
    color_subsets, count_cliques_in, count_shape, gr_score, shape_delta, signed, CodegreeCache, Score, Toggle,
};
use crate::error::{Error, Result};
use crate::graph::{pair_from_index, pair_index, Graph};
use crate::hash::{recolor, state_hash};
use crate::problem::{ForbiddenShape, ProblemSpec};
use crate::verify::verify_coloring;

/// Steps between full recounts of the score.
pub const AUDIT_INTERVAL: u64 = 1 << 14;
/// Steps between progress reports.
pub const PROGRESS_INTERVAL: u64 = 10_000;

#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub max_steps: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Limits {
    pub fn steps(max_steps: u64) -> Self {
        Limits {
            max_steps: Some(max_steps),
            max_time: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StallReason {
    /// Every neighbor of the current coloring was already visited.
    Exhausted,
    StepLimit,
    TimeLimit,
    /// Another worker found a witness first.
    Cancelled,
}

impl fmt::Display for StallReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StallReason::Exhausted => "neighborhood exhausted",
            StallReason::StepLimit => "step limit reached",
            StallReason::TimeLimit => "time limit reached",
            StallReason::Cancelled => "cancelled",
        })
    }
}

#[derive(Clone, Debug)]
pub enum SearchResult {
    Witness(MultiColoring),
    Stalled(StallReason),
}

#[derive(Clone, Debug)]
pub struct SearchStats {
    pub steps: u64,
    pub elapsed: Duration,
    pub tabu_size: usize,
    pub best_score: Score,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&MultiColoring> {
        match &self.result {
            SearchResult::Witness(mc) => Some(mc),
            SearchResult::Stalled(_) => None,
        }
    }
}

/// One applied move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub edge: (usize, usize),
    pub old_color: u8,
    pub new_color: u8,
    pub score: Score,
    pub hash: u64,
    /// Candidates skipped because their coloring was already visited.
    pub tabu_rejected: usize,
}

/// A periodic progress line.
#[derive(Clone, Copy, Debug)]
pub struct Progress {
    pub worker: usize,
    pub steps: u64,
    pub score: Score,
    pub best_score: Score,
    pub tabu_size: usize,
}

impl fmt::Display for Progress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "worker {} steps {} score {} best {} tabu {}",
            self.worker, self.steps, self.score, self.best_score, self.tabu_size
        )
    }
}

/// Per-problem incremental scoring data.
#[derive(Clone, Debug)]
enum Engine {
    /// `classes[0]` is color 1 (the graph), `classes[1]` color 2.
    TwoColor {
        shapes: [ForbiddenShape; 2],
        classes: [Graph; 2],
        caches: [Option<CodegreeCache>; 2],
    },
    /// Union graph of each `t`-subset of colors.
    Generalized {
        s: usize,
        subsets: Vec<u16>,
        unions: Vec<Vec<u64>>,
    },
}

impl Engine {
    fn new(spec: &ProblemSpec, mc: &MultiColoring) -> Self {
        match *spec {
            ProblemSpec::TwoColor { left, right } => {
                let classes = [mc.color_class(1), mc.color_class(2)];
                let cache = |i: usize, shape: ForbiddenShape| {
                    matches!(shape, ForbiddenShape::Book(_)).then(|| CodegreeCache::new(&classes[i]))
                };
                Engine::TwoColor {
                    shapes: [left, right],
                    caches: [cache(0, left), cache(1, right)],
                    classes,
                }
            }
            ProblemSpec::Generalized { r, s, t } => {
                let subsets = color_subsets(r, t);
                let classes = mc.color_classes();
                let unions = subsets.iter().map(|&m| crate::counting::union_rows(&classes, m)).collect();
                Engine::Generalized { s, subsets, unions }
            }
        }
    }

    fn delta(&self, u: usize, v: usize, old: u8, new: u8) -> Result<i128> {
        match self {
            Engine::TwoColor { shapes, classes, caches } => {
                let (from, to) = ((old - 1) as usize, (new - 1) as usize);
                let out = shape_delta(&classes[from], caches[from].as_ref(), u, v, Toggle::Remove, shapes[from])?;
                let inn = shape_delta(&classes[to], caches[to].as_ref(), u, v, Toggle::Add, shapes[to])?;
                Ok(out + inn)
            }
            Engine::Generalized { s, subsets, unions, .. } => {
                let (old_bit, new_bit) = (1u16 << (old - 1), 1u16 << (new - 1));
                let mut delta = 0i128;
                for (mask, rows) in subsets.iter().zip(unions) {
                    let sign = match (mask & old_bit != 0, mask & new_bit != 0) {
                        (true, false) => -1,
                        (false, true) => 1,
                        _ => continue,
                    };
                    let common = rows[u] & rows[v] & !(1 << u) & !(1 << v);
                    delta += sign * signed(count_cliques_in(rows, common, s - 2)?, "counting GR cliques")?;
                }
                Ok(delta)
            }
        }
    }

    fn apply(&mut self, u: usize, v: usize, old: u8, new: u8) {
        match self {
            Engine::TwoColor { classes, caches, .. } => {
                let (from, to) = ((old - 1) as usize, (new - 1) as usize);
                classes[from].remove_edge(u, v);
                classes[to].add_edge(u, v);
                if let Some(c) = caches[from].as_mut() {
                    c.toggle(&classes[from], u, v, Toggle::Remove);
                }
                if let Some(c) = caches[to].as_mut() {
                    c.toggle(&classes[to], u, v, Toggle::Add);
                }
            }
            Engine::Generalized { subsets, unions, .. } => {
                let (old_bit, new_bit) = (1u16 << (old - 1), 1u16 << (new - 1));
                for (mask, rows) in subsets.iter().zip(unions.iter_mut()) {
                    match (mask & old_bit != 0, mask & new_bit != 0) {
                        (true, false) => {
                            rows[u] &= !(1 << v);
                            rows[v] &= !(1 << u);
                        }
                        (false, true) => {
                            rows[u] |= 1 << v;
                            rows[v] |= 1 << u;
                        }
                        _ => {}
                    }
                }
            }
        }
    }
}

/// Full score of `mc` under `spec`, recomputed from scratch.
pub fn full_score(spec: &ProblemSpec, mc: &MultiColoring) -> Result<Score> {
    match *spec {
        ProblemSpec::TwoColor { left, right } => {
            count_shape(&mc.color_class(1), left)?.checked_add(count_shape(&mc.color_class(2), right)?)
        }
        ProblemSpec::Generalized { s, t, .. } => gr_score(mc, s, t),
    }
}

/// A single search walk: the current coloring and everything derived from it.
#[derive(Clone, Debug)]
pub struct SearchState {
    spec: ProblemSpec,
    coloring: MultiColoring,
    engine: Engine,
    score: Score,
    best_score: Score,
    hash: u64,
    tabu: HashSet<u64>,
    rng: ChaCha8Rng,
    steps: u64,
}

/// A uniformly random coloring of `K_n` from `seed`, with caches built and
/// its hash marked visited. Two-color problems use colors 1 and 2.
pub fn init_state(spec: &ProblemSpec, n: usize, seed: u64) -> Result<SearchState> {
    if n < 2 {
        return Err(Error::Input(format!("search needs at least 2 vertices, got {n}")));
    }
    let r = spec.colors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = (0..n * (n - 1) / 2).map(|_| rng.random_range(1..=r as u8)).collect();
    SearchState::from_coloring(spec, MultiColoring::from_colors(n, r, colors)?, rng)
}

impl SearchState {
    /// Start a walk at a given coloring.
    pub fn from_coloring(spec: &ProblemSpec, coloring: MultiColoring, rng: ChaCha8Rng) -> Result<Self> {
        if coloring.colors_used() != spec.colors() {
            return Err(Error::Input(format!(
                "{spec} needs {} colors, coloring has {}",
                spec.colors(),
                coloring.colors_used()
            )));
        }
        let score = full_score(spec, &coloring)?;
        let hash = state_hash(&coloring);
        Ok(SearchState {
            spec: *spec,
            engine: Engine::new(spec, &coloring),
            coloring,
            score,
            best_score: score,
            hash,
            tabu: HashSet::from([hash]),
            rng,
            steps: 0,
        })
    }

    pub fn coloring(&self) -> &MultiColoring {
        &self.coloring
    }

    pub fn score(&self) -> Score {
        self.score
    }

    pub fn best_score(&self) -> Score {
        self.best_score
    }

    pub fn hash(&self) -> u64 {
        self.hash
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn tabu_size(&self) -> usize {
        self.tabu.len()
    }

    pub fn is_tabu(&self, hash: u64) -> bool {
        self.tabu.contains(&hash)
    }

    /// Recount the score from scratch and compare with the maintained value.
    pub fn audit(&self) -> Result<()> {
        let full = full_score(&self.spec, &self.coloring)?;
        if full != self.score {
            return Err(Error::Internal(format!(
                "maintained score {} but recount gives {full} after {} steps",
                self.score, self.steps
            )));
        }
        if state_hash(&self.coloring) != self.hash {
            return Err(Error::Internal("maintained hash differs from recomputation".into()));
        }
        Ok(())
    }

    fn stats(&self, elapsed: Duration) -> SearchStats {
        SearchStats {
            steps: self.steps,
            elapsed,
            tabu_size: self.tabu.len(),
            best_score: self.best_score,
        }
    }
}

/// Apply the best non-tabu single-edge recoloring. Ties are broken uniformly
/// at random. Returns `None` when every candidate is tabu.
pub fn tabu_step(state: &mut SearchState) -> Result<Option<StepReport>> {
    let n = state.coloring.order();
    let r = state.coloring.colors_used() as u8;
    let mut best: Option<(i128, usize, u8, u64)> = None;
    let mut ties = 0u32;
    let mut rejected = 0usize;
    for e in 0..n * (n - 1) / 2 {
        let (u, v) = pair_from_index(e);
        let old = state.coloring.color_at(e);
        for new in (1..=r).filter(|&c| c != old) {
            let hash = recolor(state.hash, e, old, new);
            if state.tabu.contains(&hash) {
                rejected += 1;
                continue;
            }
            let delta = state.engine.delta(u, v, old, new)?;
            match best {
                Some((d, ..)) if delta > d => {}
                Some((d, ..)) if delta == d => {
                    ties += 1;
                    if state.rng.random_range(0..ties) == 0 {
                        best = Some((delta, e, new, hash));
                    }
                }
                _ => {
                    ties = 1;
                    best = Some((delta, e, new, hash));
                }
            }
        }
    }
    let Some((delta, e, new, hash)) = best else {
        return Ok(None);
    };
    let (u, v) = pair_from_index(e);
    let old = state.coloring.color_at(e);
    state.engine.apply(u, v, old, new);
    state.coloring.set_color(u, v, new);
    state.score = state.score.apply_delta(delta)?;
    state.best_score = state.best_score.min(state.score);
    state.hash = hash;
    state.tabu.insert(hash);
    state.steps += 1;
    if state.steps.is_multiple_of(AUDIT_INTERVAL) {
        state.audit()?;
    }
    debug_assert_eq!(pair_index(u, v), e);
    Ok(Some(StepReport {
        edge: (u, v),
        old_color: old,
        new_color: new,
        score: state.score,
        hash,
        tabu_rejected: rejected,
    }))
}

/// Step `state` until it holds a witness, a limit is hit, `stop` is raised,
/// or the neighborhood is exhausted. Witnesses are re-verified from scratch.
pub fn drive(
    state: &mut SearchState,
    limits: &Limits,
    stop: Option<&AtomicBool>,
    mut progress: impl FnMut(&SearchState),
) -> Result<SearchOutcome> {
    let start = Instant::now();
    let result = loop {
        if state.score.is_zero() {
            state.audit()?;
            let verdict = verify_coloring(&state.coloring, &state.spec)?;
            if let Some(v) = verdict.violation {
                return Err(Error::Internal(format!("zero-score coloring contains {v}")));
            }
            break SearchResult::Witness(state.coloring.clone());
        }
        if stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
            break SearchResult::Stalled(StallReason::Cancelled);
        }
        if limits.max_steps.is_some_and(|m| state.steps >= m) {
            break SearchResult::Stalled(StallReason::StepLimit);
        }
        if limits.max_time.is_some_and(|m| start.elapsed() >= m) {
            break SearchResult::Stalled(StallReason::TimeLimit);
        }
        if tabu_step(state)?.is_none() {
            break SearchResult::Stalled(StallReason::Exhausted);
        }
        if state.steps.is_multiple_of(PROGRESS_INTERVAL) {
            progress(state);
        }
    };
    Ok(SearchOutcome {
        result,
        stats: state.stats(start.elapsed()),
    })
}

/// One search from a random coloring of `K_n`.
pub fn run_search(spec: &ProblemSpec, n: usize, seed: u64, limits: &Limits) -> Result<SearchOutcome> {
    let mut state = init_state(spec, n, seed)?;
    drive(&mut state, limits, None, |_| {})
}

#[derive(Clone, Debug)]
pub struct ParallelOutcome {
    /// Seed and coloring of the first worker to find a witness.
    pub witness: Option<(u64, MultiColoring)>,
    /// Per worker, in the order of the given seeds.
    pub workers: Vec<(u64, SearchOutcome)>,
}

/// Independent searches, one thread per seed. The first witness stops the rest
/// at their next step.
pub fn run_parallel(
    spec: &ProblemSpec,
    n: usize,
    seeds: &[u64],
    limits: &Limits,
    progress: Option<&(dyn Fn(&Progress) + Sync)>,
) -> Result<ParallelOutcome> {
    if seeds.is_empty() {
        return Err(Error::Input("need at least one seed".into()));
    }
    let unique: HashSet<u64> = seeds.iter().copied().collect();
    if unique.len() != seeds.len() {
        return Err(Error::Input("seeds must be distinct".into()));
    }
    let stop = AtomicBool::new(false);
    let first: OnceLock<(u64, MultiColoring)> = OnceLock::new();
    let results: Vec<Result<SearchOutcome>> = std::thread::scope(|scope| {
        let handles: Vec<_> = seeds
            .iter()
            .enumerate()
            .map(|(worker, &seed)| {
                let (stop, first) = (&stop, &first);
                scope.spawn(move || {
                    let mut state = init_state(spec, n, seed)?;
                    let outcome = drive(&mut state, limits, Some(stop), |s| {
                        if let Some(report) = progress {
                            report(&Progress {
                                worker,
                                steps: s.steps(),
                                score: s.score(),
                                best_score: s.best_score(),
                                tabu_size: s.tabu_size(),
                            });
                        }
                    });
                    match &outcome {
                        Ok(o) => {
                            if let Some(mc) = o.witness() {
                                let _ = first.set((seed, mc.clone()));
                                stop.store(true, Ordering::Relaxed);
                            }
                        }
                        Err(_) => stop.store(true, Ordering::Relaxed),
                    }
                    outcome
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    let workers = seeds
        .iter()
        .copied()
        .zip(results)
        .map(|(seed, r)| r.map(|o| (seed, o)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParallelOutcome {
        witness: first.into_inner(),
        workers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    #[test]
    fn deterministic_init() {
        let spec = parse_problem("B2,B3").unwrap();
        let a = init_state(&spec, 10, 7).unwrap();
        let b = init_state(&spec, 10, 7).unwrap();
        assert_eq!(a.coloring(), b.coloring());
        assert_ne!(a.coloring(), init_state(&spec, 10, 8).unwrap().coloring());
        assert_eq!(a.tabu_size(), 1);
    }

    #[test]
    fn steps_keep_score_and_hash_exact() {
        for text in ["B2,B3", "W5,W5", "K3,K4", "GR:3,K4,2", "B2,K4"] {
            let spec = parse_problem(text).unwrap();
            let mut state = init_state(&spec, 9, 11).unwrap();
            for i in 0..60 {
                if tabu_step(&mut state).unwrap().is_none() {
                    break;
                }
                state.audit().unwrap();
                assert_eq!(state.tabu_size(), i + 2, "{text}");
            }
        }
    }

    #[test]
    fn finds_pentagon_coloring() {
        let spec = parse_problem("K3,K3").unwrap();
        let out = run_search(&spec, 5, 1, &Limits::steps(1000)).unwrap();
        let mc = out.witness().expect("witness on 5 vertices");
        assert!(verify_coloring(mc, &spec).unwrap().valid);
    }

    #[test]
    fn six_vertices_never_succeed() {
        let spec = parse_problem("K3,K3").unwrap();
        let out = run_search(&spec, 6, 1, &Limits::steps(2000)).unwrap();
        assert!(matches!(
            out.result,
            SearchResult::Stalled(StallReason::StepLimit | StallReason::Exhausted)
        ));
    }

    #[test]
    fn one_move_from_witness() {
        let spec = parse_problem("K3,K3").unwrap();
        let mut mc = MultiColoring::from_graph(&Graph::cycle(5));
        mc.set_color(0, 1, 2);
        let mut state = SearchState::from_coloring(&spec, mc, ChaCha8Rng::seed_from_u64(0)).unwrap();
        let report = tabu_step(&mut state).unwrap().unwrap();
        assert_eq!(report.score, Score::ZERO);
        assert_eq!(report.edge, (0, 1));
    }

    #[test]
    fn parallel_stops_everyone() {
        let spec = parse_problem("K3,K3").unwrap();
        let out = run_parallel(&spec, 5, &[1, 2, 3, 4], &Limits::steps(100_000), None).unwrap();
        let (_, mc) = out.witness.unwrap();
        assert!(verify_coloring(&mc, &spec).unwrap().valid);
        assert_eq!(out.workers.len(), 4);
        assert!(run_parallel(&spec, 5, &[1, 1], &Limits::default(), None).is_err());
    }
}
