//! Brute-force ground truth: trestle and Hamilton-cycle search, maximum
//! independent sets, exhaustive enumeration of unlabeled trees and small
//! graphs, and canonical forms.
//!
//! Searches take a [`SearchBudget`] and report [`SearchOutcome::Exhausted`]
//! when it runs out, which is never conflated with a proof of absence.

use std::time::{Duration, Instant};

mod canon;
mod graphs;
mod hamilton;
mod independence;
pub(crate) mod trees;
mod trestle_search;

pub use canon::{
    canonical_graph, canonical_labelled_tree, canonical_marked_tree, canonical_tree, graph_code, labelled_tree_code,
    marked_tree_code, tree_code, GraphCode, TreeCode,
};
pub use graphs::{enumerate_connected_graphs, enumerate_graphs, MAX_ENUMERATED_ORDER};
pub use hamilton::{fleischner_hamilton, hamilton_cycle};
pub use independence::{digraph_independence_number, max_independent_set, MAX_INDEPENDENCE_ORDER};
pub use trees::{enumerate_trees, tree_count, TreeEnumerator};
pub use trestle_search::{brute_force_square_trestle, brute_force_trestle, trestle_by_degree_targets};

/// Limits on a search. `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub const fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            max_time: None,
        }
    }

    pub const fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub const fn with_time(mut self, limit: Duration) -> Self {
        self.max_time = Some(limit);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(50_000_000).with_time(Duration::from_secs(60))
    }
}

/// Result of a budgeted exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted without a hit.
    NoneExists,
    /// The budget ran out first; nothing is known.
    Exhausted,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_none_exists(&self) -> bool {
        matches!(self, SearchOutcome::NoneExists)
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(x) => SearchOutcome::Found(f(x)),
            SearchOutcome::NoneExists => SearchOutcome::NoneExists,
            SearchOutcome::Exhausted => SearchOutcome::Exhausted,
        }
    }
}

/// Node and clock accounting for one search.
pub(crate) struct Meter {
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    tripped: bool,
}

impl Meter {
    pub fn new(budget: SearchBudget) -> Self {
        Meter {
            nodes: 0,
            budget,
            started: Instant::now(),
            tripped: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.tripped = true;
        }
        if self.nodes % 1024 == 0 && self.budget.max_time.is_some_and(|t| self.started.elapsed() > t) {
            self.tripped = true;
        }
        !self.tripped
    }

    pub fn tripped(&self) -> bool {
        self.tripped
    }
}
