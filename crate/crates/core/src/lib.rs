//! Edge-colorings of closed webs.
//!
//! A closed web is a plane, 3-regular, bipartite-oriented multigraph
//! (every vertex is a sink or a source), possibly with vertexless loops.
//! This crate stores webs as combinatorial maps ([`WebMap`]), enumerates
//! their proper 3-edge-colorings, grades each coloring by its total degree
//! and sums `q^{d_t}` into the colored bracket. The bracket is computed two
//! independent ways: by direct enumeration ([`bracket_enum`]) and by local
//! rewriting of circles, digons and squares ([`bracket_reduce`]).
//!
//! The [`kempe`] module studies τ-moves (Kempe changes along bicolored
//! cycles) and the graph they induce on the set of colorings.

pub mod cli;
pub mod color;
pub mod coloring;
pub mod format;
pub mod kempe;
pub mod laurent;
pub mod rewrite;
pub mod web;

pub use color::Color;
pub use coloring::{
    bracket_enum, config_degree, configuration, enumerate_colorings, total_degree, Coloring,
    Configuration,
};
pub use laurent::{quantum_int, LaurentPoly};
pub use rewrite::{bracket_reduce, generate_web};
pub use web::{
    CubicGraph, Dart, EdgeId, LoopId, Orientation, Role, VertexId, WebError, WebMap, Winding,
};
