use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    /// Validates disjointness and, when `host` is given, membership.
    pub fn new(host: Option<&Graph>, pairs: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut pairs: Vec<Edge> = pairs.into_iter().map(|(u, v)| edge(u, v)).collect();
        pairs.sort_unstable();
        let mut seen: Vec<Vertex> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("matching edges are not vertex-disjoint"));
        }
        if let Some(g) = host {
            if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
                return Err(Error::domain(format!("matched pair ({u}, {v}) is not an edge")));
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.partner(v).is_some()
    }
}

/// Maximum matching between `left` and the vertices outside it, using
/// only host edges with exactly one end in `left`. Kuhn's augmenting
/// paths, left vertices and their neighbours scanned in ascending order.
/// Returns `mate[v]` for every vertex.
pub(crate) fn max_cross_matching(g: &Graph, in_left: &[bool], left: &[Vertex]) -> Vec<Option<Vertex>> {
    let mut mate = vec![None; g.n()];
    let mut stamp = vec![usize::MAX; g.n()];
    for (round, &r) in left.iter().enumerate() {
        augment(g, in_left, r, round, &mut stamp, &mut mate);
    }
    mate
}

fn augment(
    g: &Graph,
    in_left: &[bool],
    r: Vertex,
    round: usize,
    stamp: &mut [usize],
    mate: &mut [Option<Vertex>],
) -> bool {
    for &b in g.neighbors(r) {
        if in_left[b] || stamp[b] == round {
            continue;
        }
        stamp[b] = round;
        let free = match mate[b] {
            None => true,
            Some(r2) => augment(g, in_left, r2, round, stamp, mate),
        };
        if free {
            mate[b] = Some(r);
            mate[r] = Some(b);
            return true;
        }
    }
    false
}

fn left_mask(n: usize, left: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in left {
        mask[v] = true;
    }
    mask
}

/// A matching of size `|x|` whose every edge has exactly one end in `x`,
/// if one exists.
pub fn centre_matching(g: &Graph, x: &[Vertex]) -> Result<Option<Matching>> {
    if let Some(&v) = x.iter().find(|&&v| v >= g.n()) {
        return Err(Error::domain(format!("vertex {v} is not in the graph")));
    }
    let mut left = x.to_vec();
    left.sort_unstable();
    left.dedup();
    let mask = left_mask(g.n(), &left);
    let mate = max_cross_matching(g, &mask, &left);
    if left.iter().any(|&r| mate[r].is_none()) {
        return Ok(None);
    }
    let pairs = left.iter().map(|&r| edge(r, mate[r].unwrap()));
    Ok(Some(Matching::new(Some(g), pairs)?))
}

/// A set `R` of red vertices whose black neighbourhood is smaller than
/// `R` (black = not red; only red-black edges count).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallViolator {
    pub set: Vec<Vertex>,
    pub neighbourhood: Vec<Vertex>,
}

/// Black neighbours of `set` (sorted).
pub fn black_neighbourhood(g: &Graph, is_red: &[bool], set: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = set
        .iter()
        .flat_map(|&r| g.neighbors(r).iter().copied())
        .filter(|&b| !is_red[b])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// True when every vertex of `subset` can be matched to a distinct black
/// neighbour.
pub fn saturatable(g: &Graph, is_red: &[bool], subset: &[Vertex]) -> bool {
    let mate = max_cross_matching(g, is_red, subset);
    subset.iter().all(|&r| mate[r].is_some())
}

/// Violator inside `subset` from the alternating-reachability set of an
/// unmatched vertex (lowest id), or `None` when `subset` is saturatable.
fn violator_within(g: &Graph, is_red: &[bool], subset: &[Vertex]) -> Option<Vec<Vertex>> {
    let mate = max_cross_matching(g, is_red, subset);
    let root = *subset.iter().find(|&&r| mate[r].is_none())?;
    let mut in_subset = vec![false; g.n()];
    for &r in subset {
        in_subset[r] = true;
    }
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut reds = vec![root];
    let mut i = 0;
    while i < reds.len() {
        let r = reds[i];
        i += 1;
        for &b in g.neighbors(r) {
            if is_red[b] || seen[b] {
                continue;
            }
            seen[b] = true;
            // b is matched, otherwise the matching was not maximum
            let r2 = mate[b].expect("maximum matching leaves no augmenting path");
            if in_subset[r2] && !seen[r2] {
                seen[r2] = true;
                reds.push(r2);
            }
        }
    }
    reds.sort_unstable();
    Some(reds)
}

/// Inclusion-minimal Hall violator for the red vertices, or `None` when a
/// matching saturating all of them exists.
pub fn minimal_hall_violator(g: &Graph, red: &[Vertex]) -> Result<Option<HallViolator>> {
    if let Some(&v) = red.iter().find(|&&v| v >= g.n()) {
        return Err(Error::domain(format!("vertex {v} is not in the graph")));
    }
    let mut red_sorted = red.to_vec();
    red_sorted.sort_unstable();
    red_sorted.dedup();
    let is_red = left_mask(g.n(), &red_sorted);

    let Some(mut set) = violator_within(g, &is_red, &red_sorted) else {
        return Ok(None);
    };
    'shrink: loop {
        for idx in 0..set.len() {
            let rest: Vec<Vertex> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, &v)| v)
                .collect();
            if let Some(smaller) = violator_within(g, &is_red, &rest) {
                set = smaller;
                continue 'shrink;
            }
        }
        break;
    }
    let neighbourhood = black_neighbourhood(g, &is_red, &set);
    if neighbourhood.len() >= set.len() {
        return Err(Error::invariant(format!(
            "alternating set {set:?} is not a Hall violator"
        )));
    }
    Ok(Some(HallViolator { set, neighbourhood }))
}

impl HallViolator {
    /// Checks deficiency, neighbourhood correctness and minimality by one
    /// matching run per member.
    pub fn certify(&self, g: &Graph, red: &[Vertex]) -> bool {
        let is_red = left_mask(g.n(), red);
        if !self.set.iter().all(|&r| is_red[r]) {
            return false;
        }
        if black_neighbourhood(g, &is_red, &self.set) != self.neighbourhood
            || self.neighbourhood.len() >= self.set.len()
        {
            return false;
        }
        (0..self.set.len()).all(|idx| {
            let rest: Vec<Vertex> = self
                .set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, &v)| v)
                .collect();
            saturatable(g, &is_red, &rest)
        })
    }
}
