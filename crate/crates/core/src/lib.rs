//! Steiner Orientation on mixed graphs: a decision solver with an exhaustive
//! reference oracle, and the reduction from planar monotone 3-SAT that shows
//! the problem NP-hard on planar instances.
//!
//! An [`Instance`] is a [`MixedGraph`] with terminal pairs. An
//! [`Orientation`] assigns each undirected edge `Forward` (first stored
//! endpoint to second) or `Reverse`; it solves the instance when every
//! source reaches its target.

pub mod compile;
pub mod enumerate;
pub mod equiv;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod gen;
pub mod graph;
pub mod planarity;
pub mod pm3sat;
pub mod reach;
pub mod solver;
pub mod validate;

pub use compile::{compile, compile_formula, decode, Compiled, ReductionMetadata};
pub use enumerate::{enumerate_valid, oracle_accepts, valid_orientations, MAX_ENUMERATION_EDGES};
pub use equiv::{check_equivalence, EquivalenceReport};
pub use error::{EnumerateError, GraphError, ParseError};
pub use gadgets::{Gadget, GadgetKind};
pub use graph::{EdgeId, EdgeState, Instance, MixedGraph, Orientation, Point, TerminalPair, Vertex, VertexId};
pub use planarity::check_planarity;
pub use pm3sat::{parse_formula, sat_oracle, validate_layout, Formula, Layout};
pub use reach::{reachable_set, verify_orientation};
pub use solver::{solve, solve_with, SolveResult, SolveStats, SolveStatus, SolverOptions};
pub use validate::check_source_sink_property;
