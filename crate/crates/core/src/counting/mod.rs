//! Exact subgraph counts used as search scores.
//!
//! Every counter has a full-count form and a single-edge delta form. A score of
//! zero means the graph (or coloring) contains no copy of the counted shape.

mod books;
mod cliques;
mod gr;
mod wheels;

use std::fmt;
use std::ops::Add;

pub use books::{
    apply_book_toggle, book_delta, books_through_edge, count_books, find_book, CodegreeCache,
};
pub use cliques::{
    cliques_through_pair, count_cliques, count_cliques_at_edge, count_cliques_in, find_clique_in,
};
pub use gr::{color_subsets, gr_delta, gr_score, union_rows};
pub use wheels::{count_wheels, find_wheel, wheel_delta, wheels_through_edge};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::problem::ForbiddenShape;

/// Direction of a single-edge change.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toggle {
    Add,
    Remove,
}

/// A nonnegative subgraph count. Arithmetic is checked; overflow is an error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Score(pub u128);

impl Score {
    pub const ZERO: Score = Score(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn checked_add(self, other: Score) -> Result<Score> {
        self.0
            .checked_add(other.0)
            .map(Score)
            .ok_or(Error::Overflow("adding scores"))
    }

    /// `self + delta`, failing if the result would be negative or overflow.
    pub fn apply_delta(self, delta: i128) -> Result<Score> {
        let value = if delta >= 0 {
            self.0.checked_add(delta as u128)
        } else {
            self.0.checked_sub(delta.unsigned_abs())
        };
        value.map(Score).ok_or(Error::Overflow("applying a score delta"))
    }
}

impl Add for Score {
    type Output = Score;

    /// Panics on overflow; use [`Score::checked_add`] where inputs are untrusted.
    fn add(self, rhs: Score) -> Score {
        Score(self.0.checked_add(rhs.0).expect("score overflow"))
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Lookup table of `C(m, k)` for `0 <= m, k <= 64`.
pub struct BinomialTable([[u128; 65]; 65]);

const fn build_binomials() -> [[u128; 65]; 65] {
    let mut t = [[0u128; 65]; 65];
    let mut m = 0;
    while m < 65 {
        t[m][0] = 1;
        let mut k = 1;
        while k <= m {
            t[m][k] = t[m - 1][k - 1] + if k < m { t[m - 1][k] } else { 0 };
            k += 1;
        }
        m += 1;
    }
    t
}

pub static BINOMIAL: BinomialTable = BinomialTable(build_binomials());

impl BinomialTable {
    /// `C(m, k)`; zero when `k > m`.
    #[inline]
    pub fn get(&self, m: usize, k: usize) -> u128 {
        if k > m || m > 64 {
            0
        } else {
            self.0[m][k]
        }
    }
}

#[inline]
pub fn binomial(m: usize, k: usize) -> u128 {
    BINOMIAL.get(m, k)
}

#[inline]
pub(crate) fn signed(x: u128, what: &'static str) -> Result<i128> {
    i128::try_from(x).map_err(|_| Error::Overflow(what))
}

/// Number of (labeled) copies of `shape` in `g` under the counting convention of
/// each counter: spine-labeled books, hub-labeled wheels, plain cliques.
pub fn count_shape(g: &Graph, shape: ForbiddenShape) -> Result<Score> {
    match shape {
        ForbiddenShape::Book(k) => count_books(g, k),
        ForbiddenShape::Wheel(k) => count_wheels(g, k),
        ForbiddenShape::Clique(k) => count_cliques(g, k),
    }
}

/// Copies of `shape` in `g` that use the edge `{u, v}` (which must be present).
pub fn count_shape_through_edge(g: &Graph, u: usize, v: usize, shape: ForbiddenShape) -> Result<u128> {
    match shape {
        ForbiddenShape::Book(k) => books_through_edge(g, u, v, k),
        ForbiddenShape::Wheel(k) => wheels_through_edge(g, u, v, k),
        ForbiddenShape::Clique(k) => cliques_through_pair(g.rows(), u, v, k),
    }
}

/// Change in `count_shape(g, shape)` from toggling `{u, v}`. Books use
/// `cache` when given and build one otherwise.
pub fn shape_delta(
    g: &Graph,
    cache: Option<&CodegreeCache>,
    u: usize,
    v: usize,
    toggle: Toggle,
    shape: ForbiddenShape,
) -> Result<i128> {
    match shape {
        ForbiddenShape::Book(k) => match cache {
            Some(c) => book_delta(g, c, u, v, toggle, k),
            None => book_delta(g, &CodegreeCache::new(g), u, v, toggle, k),
        },
        ForbiddenShape::Wheel(k) => wheel_delta(g, u, v, toggle, k),
        ForbiddenShape::Clique(k) => {
            if (toggle == Toggle::Add) == g.has_edge(u, v) {
                return Err(Error::Input(format!("cannot {toggle:?} edge ({u}, {v})")));
            }
            let through = signed(cliques_through_pair(g.rows(), u, v, k)?, "counting cliques")?;
            Ok(if toggle == Toggle::Add { through } else { -through })
        }
    }
}

/// Does `g` contain a copy of `shape` using the edge `{u, v}`? Same as
/// `count_shape_through_edge(..) > 0` but stops at the first copy.
pub fn has_shape_through_edge(g: &Graph, u: usize, v: usize, shape: ForbiddenShape) -> bool {
    match shape {
        ForbiddenShape::Book(k) => books::has_book_through_edge(g, u, v, k),
        ForbiddenShape::Wheel(k) => wheels::has_wheel_through_edge(g, u, v, k),
        ForbiddenShape::Clique(k) => {
            k == 2 || cliques::has_clique_in(g.rows(), g.row(u) & g.row(v), k - 2)
        }
    }
}
