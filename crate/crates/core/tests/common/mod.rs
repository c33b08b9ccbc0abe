//! Seeded instance generators shared by the integration suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trestle::matching_flow::centre_matching;
use trestle::patterns::{centres, is_spider_free};
use trestle::{Digraph, Graph, Matching};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random tree on `n` vertices; new vertices attach to a uniform vertex of
/// degree below `cap`.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize, cap: usize) -> Graph {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < cap).collect();
        let u = *open.choose(rng).unwrap_or(&rng.gen_range(0..v));
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Adds up to `chords` edges between vertices at distance 2 to 4.
pub fn with_chords(rng: &mut ChaCha8Rng, g: &Graph, chords: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut h = g.clone();
    for _ in 0..chords {
        let u = rng.gen_range(0..n);
        let dist = h.distances_from(u);
        let far: Vec<usize> = (0..n).filter(|&v| (2..=4).contains(&dist[v])).collect();
        if let Some(&v) = far.choose(rng) {
            edges.push((u, v));
            h = Graph::from_edges(n, edges.iter().copied()).unwrap();
        }
    }
    h
}

/// Connected `S(K_{1,4})`-free graph on 5 to `max_n` vertices together
/// with a matching of its centres, or `None` when the sample is rejected.
pub fn centred_instance(rng: &mut ChaCha8Rng, max_n: usize) -> Option<(Graph, Matching)> {
    let n = rng.gen_range(5..=max_n);
    let cap = if rng.gen_bool(0.5) { 3 } else { 4 };
    let tree = random_tree(rng, n, cap);
    let chords = if rng.gen_bool(0.3) {
        0
    } else {
        rng.gen_range(1..=n / 4 + 1)
    };
    let g = with_chords(rng, &tree, chords);
    if !is_spider_free(&g, 4) {
        return None;
    }
    let m = centre_matching(&g, &centres(&g, 3)).unwrap()?;
    Some((g, m))
}

/// Random digraph on `n` vertices with arc probability `p`, no loops.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}
