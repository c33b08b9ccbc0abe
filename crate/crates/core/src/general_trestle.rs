//! 3-trestles of `G^2` for connected graphs without an induced `S(K_{1,4})`,
//! given a matching in which every centre `x` of an induced `S(K_{1,3})`
//! is matched to a non-centre. Vertices outside the matching end up with
//! degree 2.
//!
//! Small graphs, paths and 2-connected graphs are base cases. Otherwise the
//! graph is split at a cutvertex `c` of degree at least 3. A spanning tree
//! containing the star at `c` and the matching edges away from `c` cuts
//! `G - c` into branches `V_i`, each with a single neighbour `u_i` of `c`.
//! Every non-trivial branch is solved recursively as
//! `H_i = G[V_i + c] + y_i`, where `y_i` is a pendant dummy at `c`, and
//! then opened up at its entry set `O_i`, the vertices of `V_i` adjacent
//! to `c` or `y_i`. The opened pieces `R_i` are strung together by a
//! 2-connected frame `Θ` on `N(c) ∪ {c} ∪ {w_i}` built from a linear
//! forest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cutvertices, cycle_edges, edge, is_connected, is_two_connected, square, Edge, Graph, Vertex};
use crate::matching_flow::Matching;
use crate::oracle::{fleischner_hamilton, hamilton_cycle, max_independent_set, SearchBudget, SearchOutcome};
use crate::path_cover::linear_forest_for;
use crate::patterns::{centres, is_spider_free};
use crate::verify::{ensure_passes, verify_trestle, TrestleCertificate};

/// How one level of the recursion was resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum DecompositionTrace {
    /// At most four vertices: Hamilton cycle of the square by search.
    Small {
        n: usize,
    },
    /// `G` is a path.
    Path {
        n: usize,
    },
    /// `G` is 2-connected: Hamilton cycle of the square by search.
    TwoConnected {
        n: usize,
    },
    /// Every branch at the cutvertex is a single vertex, so `G^2` is
    /// complete.
    CompleteSquare {
        n: usize,
        cutvertex: Vertex,
    },
    Split(Box<DecompositionState>),
}

impl DecompositionTrace {
    /// Whether this level or any level below used the 2-connected case.
    pub fn uses_two_connected_case(&self) -> bool {
        match self {
            DecompositionTrace::TwoConnected { .. } => true,
            DecompositionTrace::Split(s) => s.components.iter().any(|c| c.child.uses_two_connected_case()),
            _ => false,
        }
    }

    /// Number of levels, counting this one.
    pub fn depth(&self) -> usize {
        match self {
            DecompositionTrace::Split(s) => 1 + s.components.iter().map(|c| c.child.depth()).max().unwrap_or(0),
            _ => 1,
        }
    }
}

/// A split at cutvertex `c`. Vertex ids are those of the graph at this
/// level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionState {
    pub n: usize,
    pub cutvertex: Vertex,
    /// Partner of `c` when `c` is a centre.
    pub centre_partner: Option<Vertex>,
    pub spanning_tree: Vec<Edge>,
    pub components: Vec<ComponentState>,
    /// Paths of the linear forest; the first vertex of each is its end in
    /// `N(c)` (the one joined to the rest of the frame).
    pub forest: Vec<Vec<Vertex>>,
    pub theta: Vec<Edge>,
}

/// One non-trivial branch `V_i`. The child trace uses the ids of `H_i`:
/// `V_i` ascending, then `c`, then `y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentState {
    pub vertices: Vec<Vertex>,
    pub gateway: Vertex,
    /// Matching of `H_i`, in this level's ids.
    pub sub_matching: Vec<Edge>,
    pub entry_set: Vec<Vertex>,
    pub w: Vertex,
    /// `Z_i - {c, y_i}`.
    pub r_edges: Vec<Edge>,
    pub engaged: Option<Vertex>,
    pub extra_edge: Option<Edge>,
    pub child: DecompositionTrace,
}

/// 3-trestle of `G^2` in which every vertex of degree 3 is covered by `m`.
pub fn build_general_trestle(g: &Graph, m: &Matching) -> Result<TrestleCertificate> {
    build_general_trestle_traced(g, m).map(|(cert, _)| cert)
}

/// As [`build_general_trestle`], also returning the decomposition.
pub fn build_general_trestle_traced(g: &Graph, m: &Matching) -> Result<(TrestleCertificate, DecompositionTrace)> {
    check_preconditions(g, m)?;
    build(g, m)
}

fn check_preconditions(g: &Graph, m: &Matching) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::domain(format!("graph needs at least 3 vertices, got {}", g.n())));
    }
    if !is_connected(g) {
        return Err(Error::domain("graph is not connected"));
    }
    if !is_spider_free(g, 4) {
        return Err(Error::domain("graph contains an induced S(K_{1,4})"));
    }
    Matching::new(Some(g), m.pairs().iter().copied())?;
    let x = centres(g, 3);
    let mut in_x = vec![false; g.n()];
    for &v in &x {
        in_x[v] = true;
    }
    if let Some(&(u, v)) = m.pairs().iter().find(|&&(u, v)| in_x[u] == in_x[v]) {
        return Err(Error::domain(format!(
            "matching edge ({u}, {v}) does not have exactly one centre end"
        )));
    }
    if m.len() != x.len() {
        return Err(Error::domain(format!(
            "matching has {} edges but there are {} centres",
            m.len(),
            x.len()
        )));
    }
    Ok(())
}

fn build(g: &Graph, m: &Matching) -> Result<(TrestleCertificate, DecompositionTrace)> {
    let n = g.n();
    let (edges, trace) = if n <= 4 {
        let cycle = match hamilton_cycle(&square(g), SearchBudget::unlimited()) {
            SearchOutcome::Found(c) => c,
            _ => return Err(Error::invariant("square of a small connected graph is not Hamiltonian")),
        };
        (cycle_edges(&cycle), DecompositionTrace::Small { n })
    } else if g.is_path() {
        (cycle_edges(&path_square_cycle(g)?), DecompositionTrace::Path { n })
    } else if is_two_connected(g)? {
        let cycle = fleischner_hamilton(g, SearchBudget::default())?;
        (cycle_edges(&cycle), DecompositionTrace::TwoConnected { n })
    } else {
        split(g, m)?
    };
    let cert = TrestleCertificate::new(g.clone(), edges, 3).with_matching(m.clone());
    ensure_passes(&verify_trestle(&cert), "general trestle construction")?;
    Ok((cert, trace))
}

/// Hamilton cycle of the square of a path: even positions forward, odd
/// positions backward, starting from the end with the lower id.
pub fn path_square_cycle(p: &Graph) -> Result<Vec<Vertex>> {
    if p.n() < 3 || !p.is_path() {
        return Err(Error::domain("input is not a path on at least 3 vertices"));
    }
    let start = (0..p.n()).find(|&v| p.degree(v) == 1).unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = p.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    let forward = order.iter().step_by(2);
    let backward = order.iter().skip(1).step_by(2).rev();
    Ok(forward.chain(backward).copied().collect())
}

fn within_two(g: &Graph, a: Vertex, b: Vertex) -> bool {
    a != b && (g.has_edge(a, b) || g.neighbors(a).iter().any(|&x| g.has_edge(x, b)))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Vertices reachable from `start` in `t - avoid`.
fn branch(t: &Graph, start: Vertex, avoid: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; t.n()];
    seen[start] = true;
    seen[avoid] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let u = out[i];
        i += 1;
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Spanning tree from the star at `c` and the matching edges away from
/// `N[c]`, completed by scanning edges in breadth-first order from `c`.
fn spanning_tree(g: &Graph, c: Vertex, rest: &[Edge]) -> Result<Graph> {
    let mut uf = UnionFind((0..g.n()).collect());
    let mut edges = Vec::with_capacity(g.n() - 1);
    for &u in g.neighbors(c) {
        uf.union(c, u);
        edges.push((c, u));
    }
    for &(u, v) in rest {
        if !uf.union(u, v) {
            return Err(Error::invariant(
                "matching edges close a cycle with the star at the cutvertex",
            ));
        }
        edges.push((u, v));
    }
    let mut order = vec![c];
    let mut seen = vec![false; g.n()];
    seen[c] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in g.neighbors(u) {
            if uf.union(u, w) {
                edges.push((u, w));
            }
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    Ok(Graph::from_edges_unchecked(g.n(), edges))
}

struct Piece {
    state: ComponentState,
    u: Vertex,
}

fn split(g: &Graph, m: &Matching) -> Result<(Vec<Edge>, DecompositionTrace)> {
    let n = g.n();
    let cuts = cutvertices(g);
    let c = *cuts
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        .ok_or_else(|| Error::invariant("graph is neither 2-connected nor has a cutvertex"))?;
    if g.degree(c) < 3 {
        return Err(Error::invariant(format!(
            "no cutvertex of degree at least 3 in non-path graph {}",
            crate::io::to_graph6(g)
        )));
    }
    let nc = g.neighbors(c).to_vec();
    let mut in_closed = vec![false; n];
    in_closed[c] = true;
    for &u in &nc {
        in_closed[u] = true;
    }
    let (m0, rest): (Vec<Edge>, Vec<Edge>) = m.pairs().iter().partition(|&&(u, v)| in_closed[u] && in_closed[v]);

    let t = spanning_tree(g, c, &rest)?;
    let x = centres(g, 3);
    let centre_partner = if x.contains(&c) { m.partner(c) } else { None };

    let mut pieces: Vec<Piece> = Vec::new();
    for &u in &nc {
        let vertices = branch(&t, u, c);
        if vertices.len() >= 2 {
            pieces.push(solve_branch(g, m, &rest, c, u, vertices)?);
        }
    }
    let spanning: Vec<Edge> = t.edges().collect();
    if pieces.is_empty() {
        let all: Vec<Vertex> = (0..n).collect();
        return Ok((
            cycle_edges(&all),
            DecompositionTrace::CompleteSquare { n, cutvertex: c },
        ));
    }
    debug_assert!(m0.iter().all(|&(p, q)| in_closed[p] && in_closed[q]));

    let forest = frame_forest(g, c, &nc, &pieces, centre_partner, &x)?;
    let theta = frame(c, &forest, centre_partner)?;

    let mut z: Vec<Edge> = theta.clone();
    for p in &pieces {
        let uw = edge(p.u, p.state.w);
        let pos = z
            .iter()
            .position(|&e| e == uw)
            .ok_or_else(|| Error::invariant(format!("frame lacks the edge {uw:?}")))?;
        z.swap_remove(pos);
        z.extend(&p.state.r_edges);
        z.extend(p.state.extra_edge);
    }
    z.sort_unstable();
    z.dedup();

    let state = DecompositionState {
        n,
        cutvertex: c,
        centre_partner,
        spanning_tree: spanning,
        components: pieces.into_iter().map(|p| p.state).collect(),
        forest,
        theta,
    };
    Ok((z, DecompositionTrace::Split(Box::new(state))))
}

/// Recursive solution on `H_i` and its opening data.
fn solve_branch(g: &Graph, m: &Matching, rest: &[Edge], c: Vertex, u: Vertex, vertices: Vec<Vertex>) -> Result<Piece> {
    let size = vertices.len();
    let (c_local, y_local) = (size, size + 1);
    let mut to_global = vertices.clone();
    to_global.push(c);
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in to_global.iter().enumerate() {
        local[v] = i;
    }
    let induced = g.induced(&to_global);
    let h = Graph::from_edges_unchecked(size + 2, induced.edges().chain([(c_local, y_local)]));

    let hx = centres(&h, 3);
    let mut in_hx = vec![false; h.n()];
    for &v in &hx {
        in_hx[v] = true;
    }
    let mut pairs: Vec<Edge> = rest
        .iter()
        .filter(|&&(p, q)| local[p] < size && local[q] < size)
        .map(|&(p, q)| (local[p], local[q]))
        .filter(|&(p, q)| in_hx[p] || in_hx[q])
        .collect();
    let u_local = local[u];
    if in_hx[u_local] {
        let partner = m
            .partner(u)
            .ok_or_else(|| Error::invariant(format!("centre {u} is unmatched")))?;
        if local[partner] >= size {
            pairs.push((c_local, u_local));
        }
    }
    let m_i = Matching::new(Some(&h), pairs)?;
    if hx.iter().any(|&v| !m_i.covers(v)) {
        return Err(Error::invariant(format!(
            "branch at {u}: a centre of H_i is not covered"
        )));
    }

    let (z_i, child) = build(&h, &m_i)?;
    let z_i = z_i.subgraph.to_graph()?;
    if !(z_i.has_edge(c_local, y_local) && z_i.has_edge(u_local, y_local)) {
        return Err(Error::invariant(format!(
            "branch at {u}: dummy vertex not attached as expected"
        )));
    }
    let mut entry: Vec<Vertex> = std::iter::once(u)
        .chain(
            z_i.neighbors(c_local)
                .iter()
                .filter(|&&v| v < size)
                .map(|&v| to_global[v]),
        )
        .collect();
    entry.sort_unstable();
    entry.dedup();
    if !(2..=3).contains(&entry.len()) {
        return Err(Error::invariant(format!(
            "branch at {u}: entry set {entry:?} has the wrong size"
        )));
    }
    let w = *entry.iter().find(|&&v| v != u).unwrap();
    let r_edges: Vec<Edge> = z_i
        .edges()
        .filter(|&(p, q)| p < size && q < size)
        .map(|(p, q)| edge(to_global[p], to_global[q]))
        .collect();

    let (engaged, extra_edge) = if entry.len() == 3 {
        if !m_i.pairs().contains(&edge(c_local, u_local)) {
            return Err(Error::invariant(format!(
                "branch at {u}: three entries without the gateway edge"
            )));
        }
        let third = *entry.iter().find(|&&v| v != u && v != w).unwrap();
        let p = m.partner(u).unwrap();
        (Some(p), Some(edge(third, p)))
    } else {
        (None, None)
    };

    let sub_matching = m_i
        .pairs()
        .iter()
        .map(|&(p, q)| edge(to_global[p], to_global[q]))
        .collect();
    Ok(Piece {
        u,
        state: ComponentState {
            vertices,
            gateway: u,
            sub_matching,
            entry_set: entry,
            w,
            r_edges,
            engaged,
            extra_edge,
            child,
        },
    })
}

/// Spanning linear forest of `A = G^2[N(c) ∪ {w_i}]` containing every
/// `u_i w_i`, with at most three paths, each of at least two vertices and
/// starting in `N(c)`; with three paths, one of them starts at the partner
/// of `c`.
fn frame_forest(
    g: &Graph,
    c: Vertex,
    nc: &[Vertex],
    pieces: &[Piece],
    a: Option<Vertex>,
    centres_g: &[Vertex],
) -> Result<Vec<Vec<Vertex>>> {
    let in_nc = |v: Vertex| nc.binary_search(&v).is_ok();
    let pairs: Vec<(Vertex, Vertex)> = pieces.iter().map(|p| (p.u, p.state.w)).collect();
    let w_pairs: Vec<usize> = (0..pairs.len()).filter(|&i| !in_nc(pairs[i].1)).collect();

    let mut forest: Vec<Vec<Vertex>> = Vec::new();
    if !w_pairs.is_empty() {
        let touches = |i: usize, j: usize| {
            let (a1, b1) = pairs[i];
            let (a2, b2) = pairs[j];
            [a1, b1].iter().any(|&p| [a2, b2].iter().any(|&q| g.has_edge(p, q)))
        };
        let k = w_pairs.len();
        let contracted = Graph::from_edges_unchecked(
            k,
            (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| touches(w_pairs[i], w_pairs[j])),
        );
        let alpha = max_independent_set(&contracted)?.len();
        if alpha > 3 || (alpha == 3 && !centres_g.contains(&c)) {
            return Err(Error::invariant(format!(
                "contracted branch graph at cutvertex {c} has independence {alpha}"
            )));
        }
        let marked: Vec<usize> = (0..k).filter(|&i| Some(pairs[w_pairs[i]].0) == a).collect();
        let linear = linear_forest_for(&contracted, &marked)?;
        for mut path in linear.paths {
            if let Some(&mk) = marked.first() {
                if *path.last().unwrap() == mk {
                    path.reverse();
                }
            }
            let mut expanded: Vec<Vertex> = Vec::with_capacity(2 * path.len());
            for &ci in &path {
                let (u, w) = pairs[w_pairs[ci]];
                match expanded.last() {
                    None => expanded.extend([u, w]),
                    Some(&prev) if within_two(g, prev, u) => expanded.extend([u, w]),
                    Some(&prev) if within_two(g, prev, w) => expanded.extend([w, u]),
                    Some(_) => {
                        return Err(Error::invariant(format!(
                            "pair ({u}, {w}) cannot follow the forest path at cutvertex {c}"
                        )))
                    }
                }
            }
            forest.push(expanded);
        }
    }

    let in_w: Vec<Vertex> = w_pairs.iter().flat_map(|&i| [pairs[i].0, pairs[i].1]).collect();
    let mut units: Vec<Vec<Vertex>> = Vec::new();
    for (i, &(u, w)) in pairs.iter().enumerate() {
        if !w_pairs.contains(&i) {
            units.push(if Some(w) == a { vec![w, u] } else { vec![u, w] });
        }
    }
    for &v in nc {
        if !in_w.contains(&v) && !units.iter().any(|unit| unit.contains(&v)) {
            units.push(vec![v]);
        }
    }
    units.sort_by_key(|unit| (!unit.contains(&a.unwrap_or(usize::MAX)), unit.iter().min().copied()));
    let p: Vec<Vertex> = units.into_iter().flatten().collect();
    if !p.is_empty() {
        if forest.is_empty() {
            forest.push(p);
        } else {
            let target = if forest.len() == 3 {
                (0..3)
                    .find(|&i| !a.is_some_and(|a| forest[i].contains(&a)))
                    .ok_or_else(|| Error::invariant("every forest path contains the partner"))?
            } else {
                0
            };
            let mut joined = p;
            joined.extend(forest[target].iter().copied());
            forest[target] = joined;
        }
    }

    let ok_shape = forest.len() <= 3
        && forest.iter().all(|path| path.len() >= 2 && in_nc(path[0]))
        && (forest.len() < 3 || (a.is_some() && forest.iter().any(|path| Some(path[0]) == a)))
        && forest
            .iter()
            .all(|path| path.windows(2).all(|e| within_two(g, e[0], e[1])))
        && pairs.iter().all(|&(u, w)| {
            forest
                .iter()
                .any(|path| path.windows(2).any(|e| edge(e[0], e[1]) == edge(u, w)))
        });
    if !ok_shape {
        return Err(Error::invariant(format!(
            "frame forest {forest:?} at cutvertex {c} is malformed"
        )));
    }
    Ok(forest)
}

/// Joins `c` to the far end of every forest path and closes the ends in
/// `N(c)`: to `c` for one path, to each other for two, to the partner `a`
/// for three.
fn frame(c: Vertex, forest: &[Vec<Vertex>], a: Option<Vertex>) -> Result<Vec<Edge>> {
    let mut theta: Vec<Edge> = forest
        .iter()
        .flat_map(|path| path.windows(2).map(|e| edge(e[0], e[1])))
        .collect();
    let starts: Vec<Vertex> = forest.iter().map(|path| path[0]).collect();
    for path in forest {
        theta.push(edge(c, *path.last().unwrap()));
    }
    match starts.len() {
        1 => theta.push(edge(c, starts[0])),
        2 => theta.push(edge(starts[0], starts[1])),
        3 => {
            let a = a.ok_or_else(|| Error::invariant("three forest paths without a centre partner"))?;
            for &s in starts.iter().filter(|&&s| s != a) {
                theta.push(edge(a, s));
            }
        }
        k => return Err(Error::invariant(format!("frame forest has {k} paths"))),
    }
    theta.sort_unstable();
    let vertices: Vec<Vertex> = {
        let mut v: Vec<Vertex> = theta.iter().flat_map(|&(p, q)| [p, q]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let local = |x: Vertex| vertices.binary_search(&x).unwrap();
    let compact = Graph::from_edges_unchecked(vertices.len(), theta.iter().map(|&(p, q)| (local(p), local(q))));
    if !is_two_connected(&compact)? {
        return Err(Error::invariant(format!("frame at cutvertex {c} is not 2-connected")));
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching_flow::centre_matching;

    fn run(g: &Graph) -> (TrestleCertificate, DecompositionTrace) {
        let m = centre_matching(g, &centres(g, 3)).unwrap().unwrap();
        build_general_trestle_traced(g, &m).unwrap()
    }

    #[test]
    fn path_cycles() {
        assert_eq!(path_square_cycle(&Graph::path(3)).unwrap(), vec![0, 2, 1]);
        assert_eq!(path_square_cycle(&Graph::path(4)).unwrap(), vec![0, 2, 3, 1]);
        assert_eq!(path_square_cycle(&Graph::path(5)).unwrap(), vec![0, 2, 4, 3, 1]);
        assert!(path_square_cycle(&Graph::cycle(5)).is_err());
    }

    #[test]
    fn paths_give_hamilton_cycles() {
        for n in 3..10 {
            let (cert, _) = run(&Graph::path(n));
            assert!(cert.degrees().iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn chorded_hexagon_is_hamiltonian() {
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 3)])).unwrap();
        let (cert, trace) = run(&g);
        assert!(cert.degrees().iter().all(|&d| d == 2));
        assert!(matches!(trace, DecompositionTrace::TwoConnected { .. }));
    }

    #[test]
    fn spider_splits_at_centre() {
        let g = Graph::spider(3);
        let (cert, trace) = run(&g);
        let m = centre_matching(&g, &[0]).unwrap().unwrap();
        for (v, d) in cert.degrees().into_iter().enumerate() {
            assert!(d == 2 || m.covers(v));
        }
        let DecompositionTrace::Split(state) = trace else {
            panic!()
        };
        assert_eq!(state.cutvertex, 0);
        assert_eq!(state.components.len(), 3);
    }

    #[test]
    fn caterpillar_with_long_legs() {
        // spine 0-1-2-3 with pendant paths of length 2 at 1 and 2
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (2, 6), (6, 7)]).unwrap();
        let (cert, trace) = run(&g);
        assert!(verify_trestle(&cert).passed());
        assert!(!trace.uses_two_connected_case());
    }

    #[test]
    fn star_square_is_complete() {
        let (cert, trace) = run(&Graph::star(5));
        assert!(matches!(trace, DecompositionTrace::CompleteSquare { .. }));
        assert!(cert.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn preconditions() {
        let s4 = Graph::spider(4);
        assert!(build_general_trestle(&s4, &Matching::empty()).is_err());
        let s3 = Graph::spider(3);
        assert!(build_general_trestle(&s3, &Matching::empty()).is_err());
        let disconnected = Graph::empty(3);
        assert!(build_general_trestle(&disconnected, &Matching::empty()).is_err());
    }
}
