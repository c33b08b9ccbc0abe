//! Induced spiders `S(K_{1,k})`, their centres, and per-vertex tree
//! profiles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree, Vertex};

/// An induced copy of `S(K_{1,k})` in some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderEmbedding {
    pub centre: Vertex,
    pub mids: Vec<Vertex>,
    /// `leaves[i]` hangs off `mids[i]`.
    pub leaves: Vec<Vertex>,
}

impl SpiderEmbedding {
    pub fn k(&self) -> usize {
        self.mids.len()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs = vec![self.centre];
        vs.extend(&self.mids);
        vs.extend(&self.leaves);
        vs
    }

    /// Checks distinctness and that the host induces exactly the spider's
    /// edges on these vertices.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let k = self.mids.len();
        if self.leaves.len() != k {
            return false;
        }
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return false;
        }
        let expected = |a: Vertex, b: Vertex| -> bool {
            (0..k).any(|i| {
                let (m, l) = (self.mids[i], self.leaves[i]);
                (a == self.centre && b == m) || (b == self.centre && a == m) || (a == m && b == l) || (a == l && b == m)
            })
        };
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b) == expected(a, b)))
    }
}

/// Backtracking search for an induced `S(K_{1,k})` centred at `centre`.
/// Mids are tried in ascending order, each followed by its lowest
/// compatible leaf, so the witness is deterministic.
pub fn find_spider(g: &Graph, centre: Vertex, k: usize) -> Option<SpiderEmbedding> {
    if g.degree(centre) < k {
        return None;
    }
    let mut mids = Vec::with_capacity(k);
    let mut leaves = Vec::with_capacity(k);
    if extend(g, centre, k, 0, &mut mids, &mut leaves) {
        Some(SpiderEmbedding { centre, mids, leaves })
    } else {
        None
    }
}

fn extend(g: &Graph, centre: Vertex, k: usize, from: usize, mids: &mut Vec<Vertex>, leaves: &mut Vec<Vertex>) -> bool {
    if mids.len() == k {
        return true;
    }
    let nbrs = g.neighbors(centre);
    // not enough candidates left
    if nbrs.len() - from < k - mids.len() {
        return false;
    }
    for idx in from..nbrs.len() {
        let m = nbrs[idx];
        if leaves.contains(&m) || mids.iter().chain(leaves.iter()).any(|&x| g.has_edge(m, x)) {
            continue;
        }
        for &l in g.neighbors(m) {
            if l == centre
                || g.has_edge(centre, l)
                || mids.contains(&l)
                || leaves.contains(&l)
                || mids.iter().chain(leaves.iter()).any(|&x| g.has_edge(l, x))
            {
                continue;
            }
            mids.push(m);
            leaves.push(l);
            if extend(g, centre, k, idx + 1, mids, leaves) {
                return true;
            }
            mids.pop();
            leaves.pop();
        }
    }
    false
}

/// Centres of induced `S(K_{1,k})` copies, ascending, each with a witness.
pub fn centres_with_witnesses(g: &Graph, k: usize) -> Vec<SpiderEmbedding> {
    assert!(k >= 2, "spider order must be at least 2");
    (0..g.n()).filter_map(|v| find_spider(g, v, k)).collect()
}

/// The set of centres of induced `S(K_{1,k})` copies, ascending.
pub fn centres(g: &Graph, k: usize) -> Vec<Vertex> {
    centres_with_witnesses(g, k).into_iter().map(|s| s.centre).collect()
}

pub fn is_spider_free(g: &Graph, k: usize) -> bool {
    assert!(k >= 2, "spider order must be at least 2");
    (0..g.n()).all(|v| find_spider(g, v, k).is_none())
}

/// Tree shortcut: `v` centres an induced `S(K_{1,k})` iff it has at least
/// `k` non-leaf neighbours.
pub fn tree_centres(t: &Tree, k: usize) -> Vec<Vertex> {
    let counts = non_leaf_counts(t.graph());
    (0..t.n()).filter(|&v| counts[v] >= k).collect()
}

pub(crate) fn non_leaf_counts(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    /// Centre of an induced `S(K_{1,3})`.
    Red,
    Black,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeProfile {
    /// Number of non-leaf neighbours of each vertex.
    pub non_leaf: Vec<usize>,
    pub colour: Vec<Colour>,
}

impl TreeProfile {
    pub fn red(&self) -> Vec<Vertex> {
        (0..self.colour.len())
            .filter(|&v| self.colour[v] == Colour::Red)
            .collect()
    }

    pub fn max_non_leaf(&self) -> usize {
        self.non_leaf.iter().copied().max().unwrap_or(0)
    }
}

pub fn tree_profile(t: &Tree) -> Result<TreeProfile> {
    if t.n() < 2 {
        return Err(Error::domain("tree profile needs at least two vertices"));
    }
    let non_leaf = non_leaf_counts(t.graph());
    let colour = non_leaf
        .iter()
        .map(|&c| if c >= 3 { Colour::Red } else { Colour::Black })
        .collect();
    Ok(TreeProfile { non_leaf, colour })
}

/// Caterpillar test by the spine definition: deleting all leaves leaves a
/// path (or nothing).
pub fn is_caterpillar(t: &Tree) -> bool {
    let g = t.graph();
    if g.n() <= 2 {
        return true;
    }
    let spine: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    g.induced(&spine).is_path()
}
