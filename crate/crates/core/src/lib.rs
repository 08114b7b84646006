//! Machinery for edge-chromatic critical graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the simple-graph representation, graph6 / edge-list
//!   ingestion and the average-degree-six extremal family generator.
//! * [`coloring`] holds partial proper edge colorings, Kempe chains, the
//!   constructive (Δ+1)-coloring, the exact chromatic index solver, the
//!   criticality test and the coloring enumerator.
//! * [`structure`] detects multi-fans, Kierstead paths, brooms, kites and
//!   forks in a colored graph and checks the properties every Δ-critical
//!   graph must exhibit for them.
//! * [`lemmas`] evaluates the degree/adjacency predicates that every
//!   Δ-critical graph satisfies and combines them into a sieve.
//! * [`discharging`] runs the exact-rational discharging argument for
//!   maximum degree seven.

pub mod coloring;
pub mod discharging;
pub mod graph;
pub mod lemmas;
pub mod structure;

/// Exact rational used for charges and average degrees.
pub type Rational = num_rational::Ratio<i64>;

/// Formats a rational as `"p/q"`, always including the denominator.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub use coloring::{Color, ColorSet, KempeChain, PartialEdgeColoring};
pub use graph::{Edge, EdgeId, Graph, Vertex};
