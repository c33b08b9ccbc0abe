//! Constructive Gallai–Milgram path covers and the linear forests derived
//! from them.
//!
//! The reduction follows the classical induction. Given a cover whose
//! start vertices are not independent, take an arc `s -> s'` between two
//! starts. If the path of `s` is trivial, prepend `s` to the path of
//! `s'`. Otherwise drop `s`, reduce the shortened cover of `D - s`
//! recursively, and re-attach `s` in front of whichever of its successor
//! or `s'` is still a start (the recursion loses exactly one start, so
//! one of the two survives). When some level of the recursion finds its
//! starts independent, that start set is an independent set of `D` with
//! as many vertices as the cover has paths, which already certifies the
//! bound; the loop stops there. A final pass joins any path whose end has
//! an arc to another path's start.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    /// Vertex-disjoint directed paths, ordered by start vertex.
    pub paths: Vec<Vec<Vertex>>,
    /// Independent set of the digraph with at least one vertex per path;
    /// proves `paths.len() <= α(D)`.
    pub independent: Vec<Vertex>,
}

impl PathCover {
    pub fn starts(&self) -> Vec<Vertex> {
        self.paths.iter().map(|p| p[0]).collect()
    }

    /// Cover is a partition of the vertices into directed paths.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        let mut seen = vec![false; d.n()];
        for p in &self.paths {
            if p.is_empty() {
                return false;
            }
            for &v in p {
                if v >= d.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if p.windows(2).any(|w| !d.has_arc(w[0], w[1])) {
                return false;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// True when `set` has no arc in either direction between members.
    pub fn is_independent_in(d: &Digraph, set: &[Vertex]) -> bool {
        set.iter().all(|&u| set.iter().all(|&v| u == v || !d.has_arc(u, v)))
    }

    pub fn starts_independent(&self, d: &Digraph) -> bool {
        Self::is_independent_in(d, &self.starts())
    }

    pub fn certificate_holds(&self, d: &Digraph) -> bool {
        self.independent.len() >= self.paths.len() && Self::is_independent_in(d, &self.independent)
    }
}

/// Path cover with at most `α(d)` paths.
pub fn gallai_milgram_cover(d: &Digraph) -> PathCover {
    let n = d.n();
    let mut paths: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    let mut removed = vec![false; n];
    loop {
        match reduce(d, &mut removed, &paths) {
            Ok(next) => paths = next,
            Err(independent) => {
                concatenate(d, &mut paths);
                paths.sort_by_key(|p| p[0]);
                return PathCover { paths, independent };
            }
        }
    }
}

/// Joins paths while some path end has an arc to another path's start
/// (lowest path first). Starts only disappear, so start independence and
/// the certificate survive.
fn concatenate(d: &Digraph, paths: &mut Vec<Vec<Vertex>>) {
    paths.sort_by_key(|p| p[0]);
    'again: loop {
        for i in 0..paths.len() {
            let end = *paths[i].last().unwrap();
            if let Some(j) = (0..paths.len()).find(|&j| j != i && d.has_arc(end, paths[j][0])) {
                let tail = paths.remove(j);
                let i = if j < i { i - 1 } else { i };
                paths[i].extend(tail);
                continue 'again;
            }
        }
        return;
    }
}

/// One cover with a path fewer whose starts are a subset of the current
/// starts, or the (independent) start set when no arc joins two starts.
fn reduce(
    d: &Digraph,
    removed: &mut [bool],
    paths: &[Vec<Vertex>],
) -> std::result::Result<Vec<Vec<Vertex>>, Vec<Vertex>> {
    let n = d.n();
    let mut start_of = vec![usize::MAX; n];
    for (i, p) in paths.iter().enumerate() {
        start_of[p[0]] = i;
    }
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.sort_by_key(|&i| paths[i][0]);

    let found = order.iter().find_map(|&i| {
        let s = paths[i][0];
        d.out_neighbors(s)
            .iter()
            .find(|&&t| !removed[t] && start_of[t] != usize::MAX)
            .map(|&t| (i, start_of[t]))
    });
    let Some((i, j)) = found else {
        let mut starts: Vec<Vertex> = paths.iter().map(|p| p[0]).collect();
        starts.sort_unstable();
        return Err(starts);
    };

    let s = paths[i][0];
    if paths[i].len() == 1 {
        let mut merged = vec![s];
        merged.extend(&paths[j]);
        let mut next: Vec<Vec<Vertex>> = paths
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != i && idx != j)
            .map(|(_, p)| p.clone())
            .collect();
        next.push(merged);
        return Ok(next);
    }

    let successor = paths[i][1];
    let target = paths[j][0];
    let mut shortened = paths.to_vec();
    shortened[i].remove(0);
    removed[s] = true;
    let result = reduce(d, removed, &shortened);
    removed[s] = false;
    let mut next = result?;
    let slot = next
        .iter()
        .position(|p| p[0] == successor)
        .or_else(|| next.iter().position(|p| p[0] == target))
        .expect("reduction keeps the successor or the arc head as a start");
    next[slot].insert(0, s);
    Ok(next)
}

/// Vertex-disjoint paths of an undirected graph covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForest {
    pub paths: Vec<Vec<Vertex>>,
}

impl LinearForest {
    pub fn component_count(&self) -> usize {
        self.paths.len()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for p in &self.paths {
            if p.is_empty() {
                return false;
            }
            for &v in p {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// At most one vertex of `set` per path and each of them at a path end.
    pub fn respects(&self, set: &[Vertex]) -> bool {
        self.paths.iter().all(|p| {
            let hits: Vec<usize> = (0..p.len()).filter(|&i| set.contains(&p[i])).collect();
            hits.len() <= 1 && hits.iter().all(|&i| i == 0 || i + 1 == p.len())
        })
    }
}

/// Spanning linear forest with at most `α(g)` paths in which every vertex
/// of the independent set `ends` is an end of its path and no path holds
/// two of them. Edges at `ends` are oriented towards them, all others from
/// lower to higher id, and a Gallai–Milgram cover of that orientation is
/// read back as undirected paths.
pub fn linear_forest_for(g: &Graph, ends: &[Vertex]) -> Result<LinearForest> {
    if let Some(&v) = ends.iter().find(|&&v| v >= g.n()) {
        return Err(Error::domain(format!("vertex {v} is not in the graph")));
    }
    if !g.is_independent(ends) {
        return Err(Error::domain("end set is not independent"));
    }
    let mut in_ends = vec![false; g.n()];
    for &v in ends {
        in_ends[v] = true;
    }
    let arcs = g.edges().map(|(u, v)| if in_ends[u] { (v, u) } else { (u, v) });
    let d = Digraph::from_arcs(g.n(), arcs)?;
    let cover = gallai_milgram_cover(&d);
    Ok(LinearForest { paths: cover.paths })
}
