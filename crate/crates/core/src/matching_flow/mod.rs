//! Bipartite matchings for the centre-matching condition, minimal Hall
//! violators, and flow-based arc assignments on trees.

mod assignment;
mod flow;
mod matching;

pub use assignment::{assignment_from_trestle, feasible_assignment, ArcAssignment};
pub use matching::{black_neighbourhood, centre_matching, minimal_hall_violator, saturatable, HallViolator, Matching};
