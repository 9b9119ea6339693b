//! Books `B_k`: a spine edge `uv` plus `k` pages chosen from `N(u) ∩ N(v)`.
//!
//! Counts are spine-labeled: `Σ_{uv ∈ E} C(|N(u) ∩ N(v)|, k)`.

use super::{binomial, signed, Score, Toggle};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

pub fn count_books(g: &Graph, k: usize) -> Result<Score> {
    if k == 0 {
        return Err(Error::Input("books need at least one page".into()));
    }
    let mut total = 0u128;
    for (u, v) in g.edges() {
        total = total
            .checked_add(binomial(g.codegree(u, v), k))
            .ok_or(Error::Overflow("counting books"))?;
    }
    Ok(Score(total))
}

/// `|N(u) ∩ N(v)|` for every pair, kept in step with edge toggles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeCache {
    n: usize,
    entries: Vec<u8>,
}

impl CodegreeCache {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut entries = vec![0u8; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    entries[u * n + v] = g.codegree(u, v) as u8;
                }
            }
        }
        CodegreeCache { n, entries }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.entries[u * self.n + v] as usize
    }

    #[inline]
    fn bump(&mut self, u: usize, v: usize, up: bool) {
        let n = self.n;
        let (a, b) = (u * n + v, v * n + u);
        if up {
            self.entries[a] += 1;
            self.entries[b] += 1;
        } else {
            self.entries[a] -= 1;
            self.entries[b] -= 1;
        }
    }

    /// Update for toggling `{u, v}` in `g`. `g` may be taken before or after the toggle.
    pub fn toggle(&mut self, g: &Graph, u: usize, v: usize, toggle: Toggle) {
        let up = toggle == Toggle::Add;
        for w in Bits(g.row(u) & !(1 << v)) {
            self.bump(v, w, up);
        }
        for w in Bits(g.row(v) & !(1 << u)) {
            self.bump(u, w, up);
        }
    }

    pub fn is_consistent(&self, g: &Graph) -> bool {
        *self == CodegreeCache::new(g)
    }
}

fn check_direction(g: &Graph, u: usize, v: usize, toggle: Toggle) -> Result<()> {
    match (toggle, g.has_edge(u, v)) {
        (Toggle::Add, true) => Err(Error::Input(format!("edge ({u}, {v}) already present"))),
        (Toggle::Remove, false) => Err(Error::Input(format!("edge ({u}, {v}) not present"))),
        _ => Ok(()),
    }
}

/// Books that use `{u, v}` in `g` with the edge present, given codegrees that
/// exclude (`present = false`) or include (`present = true`) the edge itself.
fn books_using_pair(g: &Graph, cache: &CodegreeCache, u: usize, v: usize, k: usize, present: bool) -> Result<u128> {
    let shift = present as usize;
    let mut total = binomial(cache.get(u, v), k);
    for w in Bits(g.row(u) & g.row(v)) {
        let a = binomial(cache.get(u, w) - shift, k - 1);
        let b = binomial(cache.get(v, w) - shift, k - 1);
        total = total
            .checked_add(a)
            .and_then(|t| t.checked_add(b))
            .ok_or(Error::Overflow("counting books through an edge"))?;
    }
    Ok(total)
}

/// Change in `count_books(g, k)` from toggling `{u, v}`; `g` and `cache` are unchanged.
///
/// Adding `uv` creates the books with spine `uv`, and for each `w ∈ N(u) ∩ N(v)`
/// one new page on spine `uw` (namely `v`) and on spine `vw` (namely `u`).
pub fn book_delta(g: &Graph, cache: &CodegreeCache, u: usize, v: usize, toggle: Toggle, k: usize) -> Result<i128> {
    if k == 0 {
        return Err(Error::Input("books need at least one page".into()));
    }
    check_direction(g, u, v, toggle)?;
    debug_assert!(cache.n == g.order());
    let present = toggle == Toggle::Remove;
    let count = signed(books_using_pair(g, cache, u, v, k, present)?, "counting books")?;
    Ok(if present { -count } else { count })
}

/// Toggle `{u, v}` in `g`, update `cache`, and return the change in book count.
pub fn apply_book_toggle(
    g: &mut Graph,
    cache: &mut CodegreeCache,
    u: usize,
    v: usize,
    toggle: Toggle,
    k: usize,
) -> Result<i128> {
    let delta = book_delta(g, cache, u, v, toggle, k)?;
    g.toggle_edge(u, v);
    cache.toggle(g, u, v, toggle);
    debug_assert!(cache.is_consistent(g), "codegree cache out of step");
    Ok(delta)
}

/// Books in `g` using the present edge `{u, v}` (as spine or as a spine–page edge).
pub fn books_through_edge(g: &Graph, u: usize, v: usize, k: usize) -> Result<u128> {
    if !g.has_edge(u, v) {
        return Ok(0);
    }
    let mut total = binomial(g.codegree(u, v), k);
    for w in Bits(g.row(u) & g.row(v)) {
        total = total
            .checked_add(binomial(g.codegree(u, w) - 1, k - 1))
            .and_then(|t| t.checked_add(binomial(g.codegree(v, w) - 1, k - 1)))
            .ok_or(Error::Overflow("counting books through an edge"))?;
    }
    Ok(total)
}

/// Some `B_k` of `g` as `(spine, pages)`.
pub fn find_book(g: &Graph, k: usize) -> Option<((usize, usize), Vec<usize>)> {
    g.edges().find_map(|(u, v)| {
        let common = g.row(u) & g.row(v);
        (common.count_ones() as usize >= k).then(|| ((u, v), Bits(common).take(k).collect()))
    })
}

pub(crate) fn has_book_through_edge(g: &Graph, u: usize, v: usize, k: usize) -> bool {
    if !g.has_edge(u, v) {
        return false;
    }
    if g.codegree(u, v) >= k {
        return true;
    }
    Bits(g.row(u) & g.row(v)).any(|w| g.codegree(u, w) >= k || g.codegree(v, w) >= k)
}
