//! Unlabeled free trees by successor generation on level sequences.
//!
//! A free tree is represented by the level sequence of its centre-rooted
//! form, arranged so that the subtree at the first child of the root is
//! not larger than the remainder. Each step either accepts the current
//! sequence or jumps directly to the next candidate satisfying that
//! condition, so every isomorphism class appears exactly once.

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree, Vertex};

/// Iterator over all unlabeled trees on `n` vertices.
pub struct TreeEnumerator {
    n: usize,
    current: Vec<usize>,
    pending: Option<Vec<usize>>,
}

impl TreeEnumerator {
    pub fn new(n: usize) -> Self {
        let pending = match n {
            0 => None,
            1 => Some(vec![0]),
            _ => Some((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
        };
        TreeEnumerator {
            n,
            current: Vec::new(),
            pending,
        }
    }

    /// Next level sequence (vertex `i` at depth `layout[i]`, preorder).
    pub fn next_layout(&mut self) -> Option<&[usize]> {
        let mut layout = self.pending.take()?;
        if self.n >= 2 {
            next_tree(&mut layout);
            let mut successor = std::mem::take(&mut self.current);
            successor.clear();
            successor.extend_from_slice(&layout);
            if next_rooted_tree(&mut successor, None) {
                self.pending = Some(successor);
            }
        }
        self.current = layout;
        Some(&self.current)
    }
}

/// Parent of every vertex in a level sequence (`usize::MAX` for the root).
pub(crate) fn layout_parents(layout: &[usize], parent: &mut Vec<Vertex>) {
    parent.clear();
    let mut stack: Vec<Vertex> = Vec::with_capacity(layout.len());
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        parent.push(stack.last().copied().unwrap_or(usize::MAX));
        stack.push(i);
    }
}

pub(crate) fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut parent = Vec::new();
    layout_parents(layout, &mut parent);
    let edges = (1..layout.len()).map(|v| (parent[v], v));
    Tree::new_unchecked(Graph::from_edges_unchecked(layout.len(), edges))
}

/// Advances `layout` in place to the next rooted level sequence, changing
/// positions from `p` on (default: the last entry above depth 1). Returns
/// false when there is none.
fn next_rooted_tree(layout: &mut [usize], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    for i in p..layout.len() {
        layout[i] = layout[i - p + q];
    }
    true
}

/// Index of the second depth-1 entry, or the length if there is none.
fn split_point(layout: &[usize]) -> usize {
    layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(layout.len(), |(i, _)| i)
}

/// Moves `layout` forward to the first free-tree representative at or
/// after it.
fn next_tree(layout: &mut [usize]) {
    let m = split_point(layout);
    // left: layout[1..m] shifted up one level; rest: [0] ++ layout[m..]
    let left_height = layout[1..m].iter().max().unwrap() - 1;
    let rest_height = layout[m..].iter().copied().max().unwrap_or(0);
    let (left_len, rest_len) = (m - 1, layout.len() - m + 1);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        if left_len > rest_len {
            valid = false;
        } else if left_len == rest_len {
            let left = layout[1..m].iter().map(|&d| d - 1);
            let rest = std::iter::once(0).chain(layout[m..].iter().copied());
            if left.gt(rest) {
                valid = false;
            }
        }
    }
    if valid {
        return;
    }
    let p = left_len;
    let jump_deep = layout[p] > 2;
    next_rooted_tree(layout, Some(p));
    if jump_deep {
        let m = split_point(layout);
        let new_left_height = layout[1..m].iter().max().unwrap() - 1;
        let len = layout.len();
        let suffix = new_left_height + 1;
        for (i, slot) in layout[len - suffix..].iter_mut().enumerate() {
            *slot = i + 1;
        }
    }
}

impl Iterator for TreeEnumerator {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.next_layout().map(layout_to_tree)
    }
}

/// All unlabeled trees on `n` vertices, one per isomorphism class.
pub fn enumerate_trees(n: usize) -> Result<TreeEnumerator> {
    if n == 0 {
        return Err(Error::domain("trees need at least one vertex"));
    }
    Ok(TreeEnumerator::new(n))
}

/// Number of unlabeled trees on `n` vertices, by enumeration.
pub fn tree_count(n: usize) -> u64 {
    let mut e = TreeEnumerator::new(n);
    let mut count = 0;
    while e.next_layout().is_some() {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<u64> = (1..=12).map(tree_count).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn four_vertices_path_and_star() {
        let trees: Vec<Tree> = enumerate_trees(4).unwrap().collect();
        let mut degrees: Vec<usize> = trees.iter().map(|t| t.max_degree()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 3]);
    }

    #[test]
    fn parents_from_layout() {
        let mut parent = Vec::new();
        layout_parents(&[0, 1, 2, 1, 2, 2], &mut parent);
        assert_eq!(parent, vec![usize::MAX, 0, 1, 0, 3, 3]);
    }

    #[test]
    fn zero_rejected() {
        assert!(enumerate_trees(0).is_err());
    }
}
