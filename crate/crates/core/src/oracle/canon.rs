//! Canonical forms: level sequences for (marked) trees, individualisation
//! and refinement for small general graphs.

use crate::graph::{Graph, Tree, Vertex};

/// Canonical code of a (marked) tree; equal codes ⟺ isomorphic, with
/// marks preserved.
pub type TreeCode = Vec<u32>;

/// Canonical code of a graph: order plus the packed upper triangle of the
/// adjacency matrix under the canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCode {
    pub n: usize,
    pub bits: Vec<u64>,
}

pub fn tree_code(t: &Tree) -> TreeCode {
    marked_tree_code(t.graph(), &vec![false; t.n()])
}

/// Level sequence with marks, children ordered by descending code,
/// minimised over the centroids as roots. `g` must be a tree.
pub fn marked_tree_code(g: &Graph, marks: &[bool]) -> TreeCode {
    best_rooting(g, &labels_of(marks), 2).0
}

/// As [`marked_tree_code`] with vertex labels in `0..radix`.
pub fn labelled_tree_code(g: &Graph, labels: &[u32], radix: u32) -> TreeCode {
    debug_assert!(labels.iter().all(|&l| l < radix));
    best_rooting(g, labels, radix).0
}

/// `g` relabelled canonically with labels in `0..radix`; returns the
/// relabelled labels too.
pub fn canonical_labelled_tree(g: &Graph, labels: &[u32], radix: u32) -> (Graph, Vec<u32>) {
    let order = best_rooting(g, labels, radix).1;
    let new_labels = order.iter().map(|&v| labels[v]).collect();
    (relabel(g, &order), new_labels)
}

fn labels_of(marks: &[bool]) -> Vec<u32> {
    marks.iter().map(|&m| u32::from(m)).collect()
}

/// `t` relabelled in the preorder of its canonical code, so isomorphic
/// inputs give identical outputs.
pub fn canonical_tree(t: &Tree) -> Tree {
    let order = best_rooting(t.graph(), &vec![0; t.n()], 2).1;
    Tree::new_unchecked(relabel(t.graph(), &order))
}

/// Marked variant of [`canonical_tree`]; returns the relabelled marks too.
pub fn canonical_marked_tree(g: &Graph, marks: &[bool]) -> (Graph, Vec<bool>) {
    let order = best_rooting(g, &labels_of(marks), 2).1;
    let new_marks = order.iter().map(|&v| marks[v]).collect();
    (relabel(g, &order), new_marks)
}

/// Graph whose vertex `i` is `order[i]` of `g`.
fn relabel(g: &Graph, order: &[Vertex]) -> Graph {
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    Graph::from_edges_unchecked(g.n(), g.edges().map(|(u, v)| (position[u], position[v])))
}

fn centroids(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let heaviest = |v: Vertex| {
        let below = g
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| size[w])
            .max()
            .unwrap_or(0);
        below.max(n - size[v])
    };
    let best = (0..n).map(heaviest).min().unwrap();
    (0..n).filter(|&v| heaviest(v) == best).collect()
}

fn best_rooting(g: &Graph, labels: &[u32], radix: u32) -> (TreeCode, Vec<Vertex>) {
    centroids(g)
        .into_iter()
        .map(|root| rooted(g, labels, radix, root, usize::MAX, 0))
        .min()
        .unwrap_or_default()
}

fn rooted(g: &Graph, labels: &[u32], radix: u32, v: Vertex, parent: Vertex, depth: u32) -> (TreeCode, Vec<Vertex>) {
    let mut children: Vec<(TreeCode, Vec<Vertex>)> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted(g, labels, radix, w, v, depth + 1))
        .collect();
    children.sort_by(|a, b| b.0.cmp(&a.0));
    let mut code = vec![radix * depth + labels[v]];
    let mut order = vec![v];
    for (c, o) in children {
        code.extend(c);
        order.extend(o);
    }
    (code, order)
}

/// Canonical code of `g` by individualisation and refinement with an
/// exhaustive search tree (no automorphism pruning); intended for small
/// graphs.
pub fn graph_code(g: &Graph) -> GraphCode {
    canonical_labelling(g).0
}

/// `g` relabelled canonically.
pub fn canonical_graph(g: &Graph) -> Graph {
    relabel(g, &canonical_labelling(g).1)
}

fn canonical_labelling(g: &Graph) -> (GraphCode, Vec<Vertex>) {
    let mut best: Option<(GraphCode, Vec<Vertex>)> = None;
    let cells = if g.n() == 0 {
        Vec::new()
    } else {
        vec![(0..g.n()).collect()]
    };
    search(g, cells, &mut best);
    best.unwrap_or((GraphCode { n: 0, bits: Vec::new() }, Vec::new()))
}

fn search(g: &Graph, mut cells: Vec<Vec<Vertex>>, best: &mut Option<(GraphCode, Vec<Vertex>)>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|&(i, c)| (c.len(), i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
        let code = code_for(g, &order);
        if best.as_ref().map_or(true, |(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for idx in 0..cells[t].len() {
        let mut next = cells.clone();
        let v = next[t].remove(idx);
        next.insert(t, vec![v]);
        search(g, next, best);
    }
}

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. Sub-cells are ordered by count, which keeps the
/// procedure independent of vertex names.
fn refine(g: &Graph, cells: &mut Vec<Vec<Vertex>>) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    'outer: loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        for s in 0..cells.len() {
            for t in 0..cells.len() {
                if cells[t].len() < 2 {
                    continue;
                }
                let count = |v: Vertex| g.neighbors(v).iter().filter(|&&w| cell_of[w] == s).count();
                let first = count(cells[t][0]);
                if cells[t].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(usize, Vertex)> = cells[t].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<Vertex>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(t..=t, parts);
                continue 'outer;
            }
        }
        break;
    }
}

fn code_for(g: &Graph, order: &[Vertex]) -> GraphCode {
    let n = order.len();
    let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[idx / 64] |= 1 << (idx % 64);
            }
            idx += 1;
        }
    }
    GraphCode { n, bits }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffled(g: &Graph, perm: &[Vertex]) -> Graph {
        Graph::from_edges_unchecked(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    #[test]
    fn isomorphic_trees_share_codes() {
        let t = Tree::new(Graph::spider(3)).unwrap();
        let perm = [6, 0, 5, 1, 4, 2, 3];
        let u = Tree::new(shuffled(t.graph(), &perm)).unwrap();
        assert_eq!(tree_code(&t), tree_code(&u));
        assert_eq!(canonical_tree(&t), canonical_tree(&u));
        let p = Tree::new(Graph::path(7)).unwrap();
        assert_ne!(tree_code(&t), tree_code(&p));
    }

    #[test]
    fn marks_distinguish() {
        let g = Graph::path(4);
        let a = marked_tree_code(&g, &[true, false, false, false]);
        let b = marked_tree_code(&g, &[false, false, false, true]);
        let c = marked_tree_code(&g, &[false, true, false, false]);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn canonicalisation_is_idempotent() {
        let t = Tree::new(Graph::spider(4)).unwrap();
        let c = canonical_tree(&t);
        assert_eq!(canonical_tree(&c), c);
    }

    #[test]
    fn graph_codes() {
        let c5 = Graph::cycle(5);
        let perm = [3, 1, 4, 0, 2];
        assert_eq!(graph_code(&c5), graph_code(&shuffled(&c5, &perm)));
        assert_ne!(graph_code(&c5), graph_code(&Graph::path(5)));
        let petersenish = canonical_graph(&c5);
        assert_eq!(canonical_graph(&petersenish), petersenish);
    }
}
