//! Property tests over random small graphs, trees and digraphs.
#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use trestle::io::{from_edgelist, from_graph6, to_edgelist, to_graph6};
use trestle::oracle::{brute_force_square_trestle, digraph_independence_number, graph_code, tree_code, SearchBudget};
use trestle::path_cover::gallai_milgram_cover;
use trestle::tree_trestle::{build_tree_trestle, decide_tree_trestle, degree_formula, TreeVerdict};
use trestle::{square, verify_trestle, Digraph, Graph, Tree, TrestleCertificate};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Random recursive tree: vertex `i` hangs below an earlier vertex.
fn tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Tree> {
    proptest::collection::vec(any::<usize>(), min_n - 1..max_n).prop_map(|picks| {
        let edges = picks.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1));
        Tree::new(Graph::from_edges(picks.len() + 1, edges).unwrap()).unwrap()
    })
}

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && i / n != i % n)
                .map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn permuted(g: &Graph, seed: u64) -> Graph {
    let n = g.n();
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    Graph::from_edges(n, g.edges().map(|(u, v)| (p[u], p[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(from_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(g in graph(12)) {
        prop_assert_eq!(from_edgelist(to_edgelist(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn square_contains_graph_and_distance_two(g in graph(10)) {
        let sq = square(&g);
        for u in 0..g.n() {
            let dist = g.distances_from(u);
            for v in 0..g.n() {
                prop_assert_eq!(sq.has_edge(u, v), u != v && dist[v] <= 2);
            }
        }
    }

    #[test]
    fn codes_ignore_labels(g in graph(8), seed in any::<u64>()) {
        prop_assert_eq!(graph_code(&g), graph_code(&permuted(&g, seed)));
    }

    #[test]
    fn tree_codes_ignore_labels(t in tree(1, 16), seed in any::<u64>()) {
        let relabelled = Tree::new(permuted(t.graph(), seed)).unwrap();
        prop_assert_eq!(tree_code(&t), tree_code(&relabelled));
    }

    #[test]
    fn decision_matches_search(t in tree(3, 11), k in 2usize..=4) {
        let decided = decide_tree_trestle(&t, k).unwrap().is_feasible();
        let found = brute_force_square_trestle(t.graph(), k, SearchBudget::default()).unwrap();
        prop_assert!(!found.is_none_exists() || !decided);
        prop_assert!(!found.is_found() || decided);
    }

    #[test]
    fn construction_follows_degree_law(t in tree(3, 40), k in 2usize..=5) {
        if let TreeVerdict::Feasible(a) = decide_tree_trestle(&t, k).unwrap() {
            prop_assert!(a.satisfies(&t, k));
            let degrees = degree_formula(&t, &a);
            let cert = build_tree_trestle(&t, k, &a).unwrap().with_expected_degrees(degrees.clone());
            prop_assert!(verify_trestle(&cert).passed());
            prop_assert_eq!(cert.degrees(), degrees);
        }
    }

    #[test]
    fn path_cover_within_independence(d in digraph(10)) {
        let cover = gallai_milgram_cover(&d);
        prop_assert!(cover.is_valid_for(&d));
        prop_assert!(cover.certificate_holds(&d));
        prop_assert!(cover.paths.len() <= digraph_independence_number(&d).unwrap());
    }

    #[test]
    fn verification_rejects_dropped_edges(t in tree(4, 30), pick in any::<usize>()) {
        let TreeVerdict::Feasible(a) = decide_tree_trestle(&t, 3).unwrap() else { return Ok(()) };
        let cert = build_tree_trestle(&t, 3, &a).unwrap();
        let mut edges = cert.edges().to_vec();
        edges.remove(pick % edges.len());
        // expected degrees catch drops that keep the rest 2-connected
        let damaged = TrestleCertificate::new(t.graph().clone(), edges, 3)
            .with_expected_degrees(cert.degrees());
        prop_assert!(!verify_trestle(&damaged).passed());
    }

    #[test]
    fn verification_rejects_foreign_edges(t in tree(4, 30), pick in any::<usize>()) {
        let TreeVerdict::Feasible(a) = decide_tree_trestle(&t, 3).unwrap() else { return Ok(()) };
        let cert = build_tree_trestle(&t, 3, &a).unwrap();
        let g = t.graph();
        let far: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| {
                let dist = g.distances_from(u);
                (u + 1..g.n()).filter(move |&v| dist[v] > 2).map(move |v| (u, v))
            })
            .collect();
        if far.is_empty() {
            return Ok(());
        }
        let mut edges = cert.edges().to_vec();
        edges.push(far[pick % far.len()]);
        prop_assert!(!verify_trestle(&TrestleCertificate::new(g.clone(), edges, 3)).passed());
    }
}
