//! Construction, search, enumeration and verification of lower-bound witness
//! graphs for Ramsey numbers of books, wheels and cliques, and for generalized
//! Ramsey numbers `GR(r, K_s, t)`.

pub mod canon;
pub mod coloring;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hash;
pub mod matrix;
pub mod polycirculant;
pub mod problem;
pub mod tabu;
pub mod verify;

pub use canon::{CanonicalForm, Canonize};
pub use coloring::MultiColoring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{decode_graph6, encode_graph6};
pub use matrix::{emit_color_matrix, parse_color_matrix};
pub use problem::{parse_problem, ForbiddenShape, ProblemSpec};
