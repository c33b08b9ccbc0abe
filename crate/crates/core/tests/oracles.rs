//! The brute-force oracles against published counts and against slower,
//! simpler oracles written here.

mod common;

use std::collections::BTreeSet;

use rand::Rng;
use trestle::oracle::{
    enumerate_connected_graphs, enumerate_graphs, enumerate_trees, graph_code, hamilton_cycle, max_independent_set,
    tree_code, tree_count, SearchBudget, SearchOutcome,
};
use trestle::{Graph, Tree};

// Unlabeled trees, graphs and connected graphs by order.
const TREES: [u64; 16] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];
const GRAPHS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
const CONNECTED: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

#[test]
fn tree_counts() {
    for (i, &expected) in TREES.iter().enumerate() {
        assert_eq!(tree_count(i + 1), expected, "n = {}", i + 1);
    }
}

#[test]
fn graph_counts() {
    for n in 1..=8 {
        assert_eq!(enumerate_graphs(n).unwrap().len(), GRAPHS[n - 1], "n = {n}");
        assert_eq!(
            enumerate_connected_graphs(n).unwrap().len(),
            CONNECTED[n - 1],
            "n = {n}"
        );
    }
    assert!(enumerate_graphs(9).is_err());
}

fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let ends: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((ends[0], ends[1]));
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn trees_match_labelled_enumeration() {
    for n in 3..=8 {
        let mut classes = BTreeSet::new();
        let mut seq = vec![0; n - 2];
        loop {
            classes.insert(tree_code(&Tree::new(prufer_decode(&seq, n)).unwrap()));
            let Some(i) = seq.iter().rposition(|&x| x + 1 < n) else {
                break;
            };
            seq[i] += 1;
            seq[i + 1..].iter_mut().for_each(|x| *x = 0);
        }
        let enumerated: BTreeSet<_> = enumerate_trees(n).unwrap().map(|t| tree_code(&t)).collect();
        assert_eq!(classes, enumerated, "n = {n}");
    }
}

/// Lexicographically least adjacency matrix over all relabellings.
fn naive_code(n: usize, adjacent: &dyn Fn(usize, usize) -> bool) -> Vec<bool> {
    fn permutations(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(k + 1, p, out);
            p.swap(k, i);
        }
    }
    let mut perms = Vec::new();
    permutations(0, &mut (0..n).collect(), &mut perms);
    perms
        .iter()
        .map(|p| {
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .map(|(u, v)| adjacent(p[u], p[v]))
                .collect()
        })
        .min()
        .unwrap_or_default()
}

#[test]
fn graphs_match_labelled_enumeration() {
    for n in 1..=5 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut classes = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let adjacent = |u: usize, v: usize| {
                let i = pairs.iter().position(|&p| p == (u.min(v), u.max(v)));
                i.is_some_and(|i| mask >> i & 1 == 1)
            };
            classes.insert(naive_code(n, &adjacent));
        }
        assert_eq!(classes.len(), GRAPHS[n - 1]);
        let codes: BTreeSet<_> = enumerate_graphs(n).unwrap().iter().map(graph_code).collect();
        assert_eq!(codes.len(), classes.len());
    }
}

#[test]
fn independence_matches_subset_search() {
    let mut rng = common::rng(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.05..0.8);
        let g = common::random_graph(&mut rng, n, p);
        let best = (0u32..1 << n)
            .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
            .map(u32::count_ones)
            .max()
            .unwrap() as usize;
        let set = max_independent_set(&g).unwrap();
        assert!(g.is_independent(&set));
        assert_eq!(set.len(), best);
    }
}

/// Hamiltonicity by dynamic programming over subsets.
fn held_karp(g: &Graph) -> bool {
    let n = g.n();
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1usize..1 << n {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if reach[mask] >> v & 1 == 1 {
                for &w in g.neighbors(v) {
                    if mask >> w & 1 == 0 {
                        reach[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    let full = (1 << n) - 1;
    n >= 3 && (0..n).any(|v| reach[full] >> v & 1 == 1 && g.has_edge(v, 0))
}

#[test]
fn hamilton_search_matches_dynamic_programming() {
    let mut rng = common::rng(4);
    for _ in 0..400 {
        let n = rng.gen_range(3..=11);
        let p = rng.gen_range(0.2..0.7);
        let g = common::random_graph(&mut rng, n, p);
        let expected = held_karp(&g);
        match hamilton_cycle(&g, SearchBudget::unlimited()) {
            SearchOutcome::Found(c) => {
                assert!(expected);
                assert_eq!(c.iter().collect::<BTreeSet<_>>().len(), n);
                assert!((0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n])));
            }
            SearchOutcome::NoneExists => assert!(!expected),
            SearchOutcome::Exhausted => unreachable!("unlimited budget"),
        }
    }
}
