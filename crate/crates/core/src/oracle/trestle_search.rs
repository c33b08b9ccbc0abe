use super::{Meter, SearchBudget, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{cutvertices, is_connected, square, Edge, EdgeSubgraph, Graph, Vertex};
use crate::verify::TrestleCertificate;

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

/// Exhaustive search for a 2-connected spanning subgraph of `g` (the
/// graph itself, not its square) with maximum degree at most `k`.
///
/// Branch and prune over edge states. Propagation closes a vertex once it
/// reaches degree `k` and forces both remaining edges of a vertex with
/// only two left. A node is cut as soon as the still-available edges stop
/// forming a 2-connected graph. Branching first completes degree 2 at
/// the lowest deficient vertex, then bridges the lowest component or
/// cutvertex side of the chosen edges.
pub fn brute_force_trestle(g: &Graph, k: usize, budget: SearchBudget) -> Result<SearchOutcome<EdgeSubgraph>> {
    if g.n() < 3 {
        return Err(Error::domain(format!("trestle search needs n >= 3, got {}", g.n())));
    }
    if k < 2 {
        return Ok(SearchOutcome::NoneExists);
    }
    let mut s = Search::new(g, k, budget);
    let start_ok = (0..g.n()).all(|v| s.settle(v));
    if !start_ok {
        return Ok(SearchOutcome::NoneExists);
    }
    Ok(match s.run() {
        Some(true) => SearchOutcome::Found(s.chosen()),
        Some(false) => SearchOutcome::NoneExists,
        None => SearchOutcome::Exhausted,
    })
}

/// [`brute_force_trestle`] on the square of `base`, wrapped as a
/// certificate against `base`.
pub fn brute_force_square_trestle(
    base: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<SearchOutcome<TrestleCertificate>> {
    let sq = square(base);
    Ok(brute_force_trestle(&sq, k, budget)?
        .map(|z| TrestleCertificate::new(base.clone(), z.edges().iter().copied(), k)))
}

struct Search<'a> {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    status: Vec<u8>,
    deg_in: Vec<usize>,
    avail: Vec<usize>,
    trail: Vec<usize>,
    meter: Meter,
    _g: &'a Graph,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, budget: SearchBudget) -> Self {
        let edges: Vec<Edge> = g.edges().collect();
        let mut incident = vec![Vec::new(); g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        Search {
            n: g.n(),
            k,
            status: vec![UNDECIDED; edges.len()],
            deg_in: vec![0; g.n()],
            avail: (0..g.n()).map(|v| g.degree(v)).collect(),
            edges,
            incident,
            trail: Vec::new(),
            meter: Meter::new(budget),
            _g: g,
        }
    }

    fn chosen(&self) -> EdgeSubgraph {
        let edges = self
            .edges
            .iter()
            .zip(&self.status)
            .filter(|&(_, &s)| s == IN)
            .map(|(&e, _)| e);
        EdgeSubgraph::unchecked(self.n, edges)
    }

    fn set(&mut self, e: usize, st: u8) {
        debug_assert_eq!(self.status[e], UNDECIDED);
        self.status[e] = st;
        let (u, v) = self.edges[e];
        if st == IN {
            self.deg_in[u] += 1;
            self.deg_in[v] += 1;
        } else {
            self.avail[u] -= 1;
            self.avail[v] -= 1;
        }
        self.trail.push(e);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            let (u, v) = self.edges[e];
            if self.status[e] == IN {
                self.deg_in[u] -= 1;
                self.deg_in[v] -= 1;
            } else {
                self.avail[u] += 1;
                self.avail[v] += 1;
            }
            self.status[e] = UNDECIDED;
        }
    }

    /// Applies the forcing rules from `start` until quiescent.
    fn settle(&mut self, start: Vertex) -> bool {
        let mut work = vec![start];
        while let Some(v) = work.pop() {
            if self.deg_in[v] > self.k || self.avail[v] < 2 {
                return false;
            }
            let force = if self.deg_in[v] == self.k {
                OUT
            } else if self.avail[v] == 2 && self.deg_in[v] < 2 {
                IN
            } else {
                continue;
            };
            let mut changed = false;
            for idx in 0..self.incident[v].len() {
                let e = self.incident[v][idx];
                if self.status[e] == UNDECIDED {
                    self.set(e, force);
                    changed = true;
                    let (a, b) = self.edges[e];
                    work.push(if a == v { b } else { a });
                }
            }
            if changed {
                work.push(v);
            }
        }
        true
    }

    fn assign(&mut self, e: usize, st: u8) -> bool {
        if self.status[e] != UNDECIDED {
            return self.status[e] == st;
        }
        self.set(e, st);
        let (u, v) = self.edges[e];
        self.settle(u) && self.settle(v)
    }

    fn graph_of(&self, keep: impl Fn(u8) -> bool) -> Graph {
        let edges = self
            .edges
            .iter()
            .zip(&self.status)
            .filter(|&(_, &s)| keep(s))
            .map(|(&e, _)| e);
        Graph::from_edges_unchecked(self.n, edges)
    }

    /// `Some(true)` found, `Some(false)` exhausted the subtree, `None`
    /// out of budget.
    fn run(&mut self) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        let available = self.graph_of(|s| s != OUT);
        if !is_connected(&available) || !cutvertices(&available).is_empty() {
            return Some(false);
        }
        let candidates = match (0..self.n).find(|&v| self.deg_in[v] < 2) {
            Some(v) => self.undecided_at(v),
            None => {
                let z = self.graph_of(|s| s == IN);
                let side = if is_connected(&z) {
                    match cutvertices(&z).first() {
                        None => return Some(true),
                        Some(&cut) => {
                            let start = usize::from(cut == 0);
                            (reach_avoiding(&z, start, cut), Some(cut))
                        }
                    }
                } else {
                    let mut mask = vec![false; self.n];
                    for &x in &z.components()[0] {
                        mask[x] = true;
                    }
                    (mask, None)
                };
                self.crossing(&side.0, side.1)
            }
        };
        self.branch_first_in(&candidates)
    }

    fn undecided_at(&self, v: Vertex) -> Vec<usize> {
        self.incident[v]
            .iter()
            .copied()
            .filter(|&e| self.status[e] == UNDECIDED)
            .collect()
    }

    /// Undecided edges from the marked side to vertices outside it other
    /// than `skip`.
    fn crossing(&self, side: &[bool], skip: Option<Vertex>) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                self.status[e] == UNDECIDED && side[u] != side[v] && Some(u) != skip && Some(v) != skip
            })
            .collect()
    }

    /// Branch `i` fixes candidates `0..i` out and candidate `i` in; at
    /// least one candidate must be in, so the branches are exhaustive.
    fn branch_first_in(&mut self, candidates: &[usize]) -> Option<bool> {
        let base = self.trail.len();
        for (i, &e) in candidates.iter().enumerate() {
            let ok = candidates[..i].iter().all(|&f| self.assign(f, OUT)) && self.assign(e, IN);
            if ok {
                match self.run() {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.undo_to(base);
        }
        if self.meter.tripped() {
            return None;
        }
        Some(false)
    }
}

/// Vertices reachable from `start` in `g - avoid`.
fn reach_avoiding(g: &Graph, start: Vertex, avoid: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if w != avoid && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Second, independent exhaustive strategy: fix a degree target in
/// `2..=min(k, deg)` for every vertex, enumerate the subgraphs with
/// exactly those degrees edge by edge, and test each for 2-connectivity.
/// Only practical for small graphs.
pub fn trestle_by_degree_targets(g: &Graph, k: usize, budget: SearchBudget) -> Result<SearchOutcome<EdgeSubgraph>> {
    if g.n() < 3 {
        return Err(Error::domain(format!("trestle search needs n >= 3, got {}", g.n())));
    }
    let n = g.n();
    let upper: Vec<usize> = (0..n).map(|v| k.min(g.degree(v))).collect();
    if upper.iter().any(|&u| u < 2) {
        return Ok(SearchOutcome::NoneExists);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut meter = Meter::new(budget);
    let mut target = vec![2usize; n];
    loop {
        if target.iter().sum::<usize>() % 2 == 0 {
            let mut need = target.clone();
            let mut left: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            let mut picked = Vec::new();
            match exact_degree(&edges, 0, &mut need, &mut left, &mut picked, &mut meter) {
                Some(Some(z)) => return Ok(SearchOutcome::Found(EdgeSubgraph::unchecked(n, z))),
                Some(None) => {}
                None => return Ok(SearchOutcome::Exhausted),
            }
        }
        let mut i = 0;
        while i < n && target[i] == upper[i] {
            target[i] = 2;
            i += 1;
        }
        if i == n {
            return Ok(SearchOutcome::NoneExists);
        }
        target[i] += 1;
    }
}

type Hit = Option<Vec<Edge>>;

fn exact_degree(
    edges: &[Edge],
    i: usize,
    need: &mut [usize],
    left: &mut [usize],
    picked: &mut Vec<Edge>,
    meter: &mut Meter,
) -> Option<Hit> {
    if !meter.tick() {
        return None;
    }
    if i == edges.len() {
        if need.iter().any(|&x| x > 0) {
            return Some(None);
        }
        let z = Graph::from_edges_unchecked(need.len(), picked.iter().copied());
        let ok = is_connected(&z) && cutvertices(&z).is_empty();
        return Some(ok.then(|| picked.clone()));
    }
    let (u, v) = edges[i];
    left[u] -= 1;
    left[v] -= 1;
    let mut result = Some(None);
    if need[u] > 0 && need[v] > 0 {
        need[u] -= 1;
        need[v] -= 1;
        picked.push((u, v));
        if need[u] <= left[u] && need[v] <= left[v] {
            result = exact_degree(edges, i + 1, need, left, picked, meter);
        }
        picked.pop();
        need[u] += 1;
        need[v] += 1;
    }
    if matches!(result, Some(None)) && need[u] <= left[u] && need[v] <= left[v] {
        result = exact_degree(edges, i + 1, need, left, picked, meter);
    }
    left[u] += 1;
    left[v] += 1;
    result
}
