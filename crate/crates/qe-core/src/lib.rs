//! Quadratic embedding constants (QEC) of finite connected graphs.
//!
//! The QE constant of a graph is the supremum of the quadratic form
//! `<f, D f>` of the graph distance matrix `D` over unit vectors `f`
//! orthogonal to the all-ones vector. A graph admits a quadratic embedding
//! into a Hilbert space (squared point distances realizing the graph
//! distances) exactly when this constant is non-positive.
//!
//! The crate computes QE constants exactly for finite graphs, builds star
//! products of rooted graphs, evaluates the two-sided bounds that control
//! the QE constant of a star product in terms of its factors, solves the
//! underlying minimal-root equation with full support for infinite
//! parameters, and verifies the exact combinatorial identities behind the
//! closed-form path-graph bounds.
//!
//! Module map:
//!
//! - [`graph`] — finite graphs, BFS distance matrices, star products,
//!   isometric-embedding checks, edge-list I/O.
//! - [`minroot`] — the minimal solution of
//!   `sum_j d_j / (a_j d_j + a_j - lambda) = 1 / lambda`, with bisection,
//!   closed forms, and bound chains.
//! - [`condmin`] — the conditional minimum of the associated quadratic
//!   form on the unit sphere intersected with the all-ones-orthogonal
//!   hyperplane; an independent eigenvalue route to the same value.
//! - [`qec`] — exact QEC of finite graphs, the path-graph pencil
//!   specialization, closed-form path bounds, and the alternating witness.
//! - [`star_bounds`] — the sandwich bounds for star-product QE constants.
//! - [`sequences`] — exact integer/rational verification of the
//!   combinatorial identities and the integer sequence behind the path
//!   bounds.

pub mod condmin;
pub mod graph;
mod hyperplane;
pub mod minroot;
pub mod qec;
pub mod sequences;
pub mod star_bounds;

pub use graph::{DistanceMatrix, Graph, GraphKind, StarSpec};
pub use minroot::{ExtCount, ParamPair, RootSolution, SolveMethod};
pub use qec::QecResult;
pub use star_bounds::FactorSummary;
