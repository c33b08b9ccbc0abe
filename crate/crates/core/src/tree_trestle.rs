//! k-trestles of `T^2` for trees: the decision procedure and the recursive
//! construction with prescribed degrees `o(v) + max(2, n(v))`.
//!
//! The construction splits at a vertex `x` with at least three non-leaf
//! neighbours. Each non-leaf neighbour `u_j` keeps its branch, extended by
//! `x` and a fresh leaf `y_j` hanging from `x`. The branch trestles lose
//! `y_j` and are tied together by a tree `T_U` on the neighbours of `x`
//! whose degrees absorb the assignment values on the arcs into `x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::general_trestle::build_general_trestle;
use crate::graph::{edge, Edge, Graph, Tree, Vertex};
use crate::matching_flow::{feasible_assignment, ArcAssignment, Matching};
use crate::patterns::non_leaf_counts;
use crate::verify::{ensure_passes, verify_trestle, TrestleCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeVerdict {
    /// `T^2` has a k-trestle; the assignment certifies it constructively.
    Feasible(ArcAssignment),
    Infeasible {
        reason: String,
    },
}

impl TreeVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, TreeVerdict::Feasible(_))
    }
}

/// Decides whether `T^2` has a k-trestle.
pub fn decide_tree_trestle(t: &Tree, k: usize) -> Result<TreeVerdict> {
    let verdict = feasible_assignment(t, k)?;
    if let Some(a) = verdict {
        return Ok(TreeVerdict::Feasible(a));
    }
    let counts = non_leaf_counts(t.graph());
    let reason = match (0..t.n()).find(|&v| counts[v] > k) {
        Some(v) => format!("n(v)={} > k={k} at vertex {v}", counts[v]),
        None => "no arc assignment meets the in-demands within the out-capacities".to_string(),
    };
    Ok(TreeVerdict::Infeasible { reason })
}

/// Per-vertex degrees `o(v) + max(2, n(v))` prescribed by an assignment.
pub fn degree_formula(t: &Tree, a: &ArcAssignment) -> Vec<usize> {
    let counts = non_leaf_counts(t.graph());
    (0..t.n()).map(|v| a.out_sum(v) as usize + counts[v].max(2)).collect()
}

/// One recursive step: the branch tree `T_j` in local ids, the split
/// vertex `x` and dummy leaf `y_j` (local ids), and the restricted
/// assignment it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeBuildFrame {
    pub depth: usize,
    pub tree: Tree,
    pub pivot: Vertex,
    pub dummy: Vertex,
    /// Local id to the id in the parent frame's tree; the dummy maps to
    /// `usize::MAX`.
    pub to_parent: Vec<Vertex>,
    pub assignment: ArcAssignment,
}

/// k-trestle of `T^2` with `deg(v) = o(v) + max(2, n(v))` for all `v`,
/// verified before it is returned.
pub fn build_tree_trestle(t: &Tree, k: usize, a: &ArcAssignment) -> Result<TrestleCertificate> {
    build_tree_trestle_traced(t, k, a, &mut Vec::new())
}

/// As [`build_tree_trestle`], recording every recursive frame.
pub fn build_tree_trestle_traced(
    t: &Tree,
    k: usize,
    a: &ArcAssignment,
    frames: &mut Vec<TreeBuildFrame>,
) -> Result<TrestleCertificate> {
    let problems = a.violations(t, k);
    if !problems.is_empty() {
        return Err(Error::domain(format!(
            "assignment does not qualify for k={k}: {}",
            problems.join("; ")
        )));
    }
    if t.n() < 3 {
        return Err(Error::domain("tree needs at least 3 vertices"));
    }
    build(t, k, a, 0, frames)
}

fn build(
    t: &Tree,
    k: usize,
    a: &ArcAssignment,
    depth: usize,
    frames: &mut Vec<TreeBuildFrame>,
) -> Result<TrestleCertificate> {
    let counts = non_leaf_counts(t.graph());
    let expected = degree_formula(t, a);
    let edges = match (0..t.n()).find(|&v| counts[v] >= 3) {
        None => {
            if !a.is_zero() {
                return Err(Error::invariant("caterpillar with a non-zero qualifying assignment"));
            }
            build_general_trestle(t.graph(), &Matching::empty())?.edges().to_vec()
        }
        Some(x) => split_at(t, k, a, x, &counts, depth, frames)?,
    };
    let cert = TrestleCertificate::new(t.graph().clone(), edges, k).with_expected_degrees(expected);
    ensure_passes(&verify_trestle(&cert), "tree trestle construction")?;
    Ok(cert)
}

fn split_at(
    t: &Tree,
    k: usize,
    a: &ArcAssignment,
    x: Vertex,
    counts: &[usize],
    depth: usize,
    frames: &mut Vec<TreeBuildFrame>,
) -> Result<Vec<Edge>> {
    let (mut inner, leaves): (Vec<Vertex>, Vec<Vertex>) = t.neighbors(x).iter().partition(|&&u| !t.is_leaf(u));
    inner.sort_unstable();
    let neighbours: Vec<Vertex> = inner.iter().chain(&leaves).copied().collect();
    debug_assert_eq!(inner.len(), counts[x]);

    let mut z: Vec<Edge> = Vec::new();
    for &u in &inner {
        let mut part = branch_vertices(t.graph(), u, x);
        part.sort_unstable();
        let (local_x, local_y) = (part.len(), part.len() + 1);
        let mut to_parent = part.clone();
        to_parent.push(x);
        to_parent.push(usize::MAX);
        let mut local = vec![usize::MAX; t.n()];
        for (i, &v) in part.iter().enumerate() {
            local[v] = i;
        }
        let mut edges: Vec<Edge> = part
            .iter()
            .flat_map(|&v| t.neighbors(v).iter().map(move |&w| (v, w)))
            .filter(|&(v, w)| v < w && local[w] != usize::MAX)
            .map(|(v, w)| (local[v], local[w]))
            .collect();
        edges.push((local[u], local_x));
        edges.push((local_x, local_y));
        let sub = Tree::new(Graph::from_edges(part.len() + 2, edges)?)?;
        let mut sub_a = a.restrict(&sub, &to_parent);
        sub_a.set(local[u], local_x, 0)?;

        let problems = sub_a.violations(&sub, k);
        if !problems.is_empty() {
            return Err(Error::invariant(format!(
                "restricted assignment at split vertex {x} fails: {}",
                problems.join("; ")
            )));
        }
        frames.push(TreeBuildFrame {
            depth: depth + 1,
            tree: sub.clone(),
            pivot: local_x,
            dummy: local_y,
            to_parent: to_parent.clone(),
            assignment: sub_a.clone(),
        });
        let sub_z = build(&sub, k, &sub_a, depth + 1, frames)?;
        z.extend(
            sub_z
                .edges()
                .iter()
                .filter(|&&(p, q)| p != local_y && q != local_y)
                .map(|&(p, q)| edge(to_parent[p], to_parent[q])),
        );
    }

    let degrees: Vec<usize> = neighbours
        .iter()
        .enumerate()
        .map(|(j, &u)| a.value(u, x) as usize + if j < inner.len() { 1 } else { 2 })
        .collect();
    let t_u = realize_degree_tree(&degrees)?;
    z.extend(t_u.edges().map(|(p, q)| edge(neighbours[p], neighbours[q])));
    z.sort_unstable();
    Ok(z)
}

/// Vertices of the component of `g - avoid` containing `start`.
fn branch_vertices(g: &Graph, start: Vertex, avoid: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    seen[avoid] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let u = out[i];
        i += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    out
}

/// Tree with the given degree sequence. Repeatedly joins the lowest
/// remaining degree-1 vertex to the lowest vertex still needing at least
/// two edges, then joins the last two.
pub fn realize_degree_tree(degrees: &[usize]) -> Result<Tree> {
    let n = degrees.len();
    if n < 2 || degrees.contains(&0) || degrees.iter().sum::<usize>() != 2 * (n - 1) {
        return Err(Error::domain(format!("{degrees:?} is not a tree degree sequence")));
    }
    let mut left = degrees.to_vec();
    let mut active = n;
    let mut edges = Vec::with_capacity(n - 1);
    while active > 2 {
        let leaf = (0..n).find(|&v| left[v] == 1).expect("degree sum forces a leaf");
        let hub = (0..n).find(|&v| left[v] >= 2).expect("degree sum forces a hub");
        edges.push((leaf, hub));
        left[leaf] = 0;
        left[hub] -= 1;
        active -= 1;
    }
    let last: Vec<Vertex> = (0..n).filter(|&v| left[v] == 1).collect();
    edges.push((last[0], last[1]));
    Tree::new(Graph::from_edges(n, edges)?)
}
