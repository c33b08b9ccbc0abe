//! Graph substrate: simple undirected graphs with dense vertex ids, trees,
//! digraphs, edge subgraphs, squares and (bi)connectivity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Normalised undirected edge `(min, max)`.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted so that every traversal, and therefore
/// every output derived from one, is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] for edge lists already known to be valid.
    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::from_edges(n, edges).expect("edge list validated by caller")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges_unchecked(n, (0..n).map(|i| edge(i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges_unchecked(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Self::from_edges_unchecked(k + 1, (1..=k).map(|i| (0, i)))
    }

    /// Spider `S(K_{1,k})`: centre 0, mids `1..=k`, leaf `k + i` hanging
    /// off mid `i`.
    pub fn spider(k: usize) -> Self {
        Self::from_edges_unchecked(2 * k + 1, (1..=k).flat_map(|i| [(0, i), (i, k + i)]))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices` (in the given order). Vertex `i` of
    /// the result corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX {
                    adj[i].push(local[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj }
    }

    /// Graph with `v` deleted; remaining vertices keep their relative order.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Breadth-first distances from `source` (`usize::MAX` if unreachable).
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when the graph is a path on at least one vertex.
    pub fn is_path(&self) -> bool {
        let n = self.n();
        n >= 1 && self.edge_count() == n - 1 && self.adj.iter().all(|l| l.len() <= 2) && is_connected(self)
    }
}

/// Square of `g`: same vertex set, `uv` an edge iff `dist(u, v)` is 1 or 2.
///
/// Computed as the union of each vertex's one- and two-step neighbourhoods.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut mark = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    for v in 0..n {
        let mut list = Vec::new();
        mark[v] = v;
        for &w in g.neighbors(v) {
            if mark[w] != v {
                mark[w] = v;
                list.push(w);
            }
            for &x in g.neighbors(w) {
                if mark[x] != v {
                    mark[x] = v;
                    list.push(x);
                }
            }
        }
        list.sort_unstable();
        adj.push(list);
    }
    Graph { adj }
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || g.components().len() == 1
}

/// Articulation points by iterative depth-first lowpoint traversal,
/// returned in ascending order.
pub fn cutvertices(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// 2-connectedness; graphs on fewer than three vertices are outside the
/// notion and rejected.
pub fn is_two_connected(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::domain(format!(
            "2-connectivity is defined for n >= 3, got n = {}",
            g.n()
        )));
    }
    Ok(is_connected(g) && cutvertices(g).is_empty())
}

/// A tree: connected graph with `n - 1` edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Graph", into = "Graph")]
pub struct Tree(Graph);

impl Tree {
    pub fn new(g: Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::domain("a tree needs at least one vertex"));
        }
        if g.edge_count() != g.n() - 1 || !is_connected(&g) {
            return Err(Error::domain("graph is not a tree"));
        }
        Ok(Tree(g))
    }

    pub(crate) fn new_unchecked(g: Graph) -> Self {
        debug_assert!(g.n() >= 1 && g.edge_count() == g.n() - 1 && is_connected(&g));
        Tree(g)
    }

    /// Tree from a parent array (`parent[0]` is ignored, vertex 0 is the root).
    pub fn from_parents(parent: &[Vertex]) -> Result<Self> {
        let n = parent.len();
        Self::new(Graph::from_edges(n, (1..n).map(|v| edge(v, parent[v])))?)
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.n()
    }

    #[inline]
    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.0.degree(v) == 1
    }
}

impl TryFrom<Graph> for Tree {
    type Error = Error;

    fn try_from(g: Graph) -> Result<Self> {
        Tree::new(g)
    }
}

impl From<Tree> for Graph {
    fn from(t: Tree) -> Graph {
        t.0
    }
}

impl std::ops::Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

/// Directed graph without loops or parallel arcs; antiparallel pairs are
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
}

impl Digraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::domain(format!("arc ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph { out })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Underlying undirected graph (an arc in either direction gives an edge).
    pub fn underlying(&self) -> Graph {
        Graph::from_edges_unchecked(self.n(), self.arcs().map(|(u, v)| edge(u, v)))
    }
}

/// Both antiparallel arcs for every tree edge.
pub fn symmetric_orientation(t: &Tree) -> Digraph {
    Digraph::from_arcs(t.n(), t.edges().flat_map(|(u, v)| [(u, v), (v, u)])).expect("tree edges are valid arcs")
}

/// An edge subset of some host graph, stored as a sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSubgraph {
    n: usize,
    edges: Vec<Edge>,
}

impl EdgeSubgraph {
    /// Checks that every pair is an edge of `host`.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let sub = Self::unchecked(host.n(), edges);
        if let Some(&(u, v)) = sub.edges.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(Error::domain(format!("({u}, {v}) is not an edge of the host")));
        }
        Ok(sub)
    }

    /// Normalises and sorts the edge list without consulting a host.
    pub fn unchecked(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSubgraph { n, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Materialises the adjacency view.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }

    /// Vertex order of a Hamilton cycle when the subgraph is one, starting
    /// at vertex 0 and leaving it through its higher-numbered neighbour.
    pub fn as_cycle(&self) -> Option<Vec<Vertex>> {
        let g = self.to_graph().ok()?;
        if self.n < 3 || self.edges.len() != self.n || (0..self.n).any(|v| g.degree(v) != 2) {
            return None;
        }
        let mut order = vec![0];
        let mut prev = 0;
        let mut cur = g.neighbors(0)[1];
        while cur != 0 {
            order.push(cur);
            let next = if g.neighbors(cur)[0] == prev {
                g.neighbors(cur)[1]
            } else {
                g.neighbors(cur)[0]
            };
            prev = cur;
            cur = next;
        }
        (order.len() == self.n).then_some(order)
    }
}

/// Edges of the cycle visiting `order` (closing back to the first vertex).
pub fn cycle_edges(order: &[Vertex]) -> Vec<Edge> {
    let len = order.len();
    (0..len).map(|i| edge(order[i], order[(i + 1) % len])).collect()
}
