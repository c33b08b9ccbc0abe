//! k-trestles in squares of graphs: decision procedures, constructions and
//! brute-force cross-checks.
//!
//! A k-trestle of a graph is a 2-connected spanning subgraph of maximum
//! degree at most k. This crate decides and builds k-trestles of `T^2`
//! for trees `T` through integral arc assignments, builds 3-trestles of
//! `G^2` for connected graphs without an induced subdivided `K_{1,4}`
//! given a matching that covers the centres of induced subdivided
//! `K_{1,3}`, and explains infeasible trees with forbidden-subtree
//! witnesses. Every construction is re-checked by an independent verifier.

// Vertices are indices; indexing per-vertex tables by them reads best.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod general_trestle;
pub mod graph;
pub mod io;
pub mod matching_flow;
pub mod obstruction;
pub mod oracle;
pub mod path_cover;
pub mod patterns;
pub mod tree_trestle;
pub mod verify;

pub use error::{Error, Result};
pub use general_trestle::build_general_trestle;
pub use graph::{
    cutvertices, edge, is_connected, is_two_connected, square, symmetric_orientation, Digraph, Edge, EdgeSubgraph,
    Graph, Tree, Vertex,
};
pub use matching_flow::{centre_matching, ArcAssignment, HallViolator, Matching};
pub use obstruction::{check_obstruction, FFamilyMember, ObstructionWitness};
pub use oracle::{SearchBudget, SearchOutcome};
pub use tree_trestle::{build_tree_trestle, decide_tree_trestle, TreeVerdict};
pub use verify::{verify_trestle, TrestleCertificate, VerifyReport};
