use super::{Meter, SearchBudget, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{is_two_connected, square, Graph, Vertex};
use crate::io::to_graph6;

/// Hamilton cycle of `g` by depth-first path extension from vertex 0.
/// Extensions are tried fewest-onward-options first; a partial path is cut
/// when some unvisited vertex has fewer than two usable neighbours or the
/// unvisited vertices are no longer reachable from the path end.
pub fn hamilton_cycle(g: &Graph, budget: SearchBudget) -> SearchOutcome<Vec<Vertex>> {
    let n = g.n();
    if n < 3 {
        return SearchOutcome::NoneExists;
    }
    let mut s = HamiltonSearch {
        g,
        visited: vec![false; n],
        path: vec![0],
        meter: Meter::new(budget),
    };
    s.visited[0] = true;
    match s.extend() {
        Some(true) => SearchOutcome::Found(s.path),
        Some(false) => SearchOutcome::NoneExists,
        None => SearchOutcome::Exhausted,
    }
}

/// Hamilton cycle of the square of a 2-connected graph, which always
/// exists. Exhaustion or failure is reported with the instance attached.
pub fn fleischner_hamilton(g: &Graph, budget: SearchBudget) -> Result<Vec<Vertex>> {
    if !is_two_connected(g)? {
        return Err(Error::domain("graph is not 2-connected"));
    }
    match hamilton_cycle(&square(g), budget) {
        SearchOutcome::Found(c) => Ok(c),
        SearchOutcome::NoneExists => Err(Error::invariant(format!(
            "square of 2-connected graph {} has no Hamilton cycle",
            to_graph6(g)
        ))),
        SearchOutcome::Exhausted => Err(Error::Exhausted(format!(
            "Hamilton search on the square of {}",
            to_graph6(g)
        ))),
    }
}

struct HamiltonSearch<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    meter: Meter,
}

impl HamiltonSearch<'_> {
    fn extend(&mut self) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        let g = self.g;
        let end = *self.path.last().unwrap();
        if self.path.len() == g.n() {
            return Some(g.has_edge(end, 0));
        }
        let onward = |v: Vertex, visited: &[bool]| g.neighbors(v).iter().filter(|&&w| !visited[w]).count();
        let mut next: Vec<(usize, Vertex)> = g
            .neighbors(end)
            .iter()
            .filter(|&&w| !self.visited[w])
            .map(|&w| (onward(w, &self.visited), w))
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.visited[w] = true;
            self.path.push(w);
            if self.viable() {
                match self.extend() {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.path.pop();
            self.visited[w] = false;
        }
        if self.meter.tripped() {
            return None;
        }
        Some(false)
    }

    fn viable(&self) -> bool {
        let g = self.g;
        let end = *self.path.last().unwrap();
        let remaining = g.n() - self.path.len();
        if remaining == 0 {
            return true;
        }
        for v in 0..g.n() {
            if self.visited[v] {
                continue;
            }
            let usable = g
                .neighbors(v)
                .iter()
                .filter(|&&w| !self.visited[w] || w == end || w == 0)
                .count();
            if usable < 2 {
                return false;
            }
        }
        if !g.neighbors(0).iter().any(|&w| !self.visited[w]) {
            return false;
        }
        let mut seen = vec![false; g.n()];
        let mut stack = vec![end];
        seen[end] = true;
        let mut reached = 0;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] && !self.visited[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }
}
