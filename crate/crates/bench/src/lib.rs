//! Seeded fixtures for the benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trestle::patterns::{centres, is_spider_free};
use trestle::{centre_matching, Digraph, Graph, Matching, Tree};

/// Random tree on `n` vertices whose degrees stay at most `cap`.
pub fn random_tree(seed: u64, n: usize, cap: usize) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < cap).collect();
        let u = *open.choose(&mut rng).expect("cap is at least 2");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Tree::new(Graph::from_edges(n, edges).unwrap()).unwrap()
}

/// Caterpillar with a spine of `spine` vertices, each carrying one leaf.
pub fn caterpillar(spine: usize) -> Tree {
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((0..spine).map(|i| (i, spine + i)));
    Tree::new(Graph::from_edges(2 * spine, edges).unwrap()).unwrap()
}

/// Connected `S(K_{1,4})`-free graph on `n >= 2` vertices with a matching
/// of its centres, grown one vertex at a time. Each new vertex hangs from
/// a random vertex and sometimes also from one of its neighbours; an
/// extension that breaks either property is discarded.
pub fn general_instance(seed: u64, n: usize) -> (Graph, Matching) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1)];
    let mut g = Graph::from_edges(2, edges.clone()).unwrap();
    while g.n() < n {
        let v = g.n();
        let u = rng.gen_range(0..v);
        let mut next = edges.clone();
        next.push((u, v));
        if rng.gen_bool(0.4) {
            if let Some(&w) = g.neighbors(u).choose(&mut rng) {
                next.push((w, v));
            }
        }
        let h = Graph::from_edges(v + 1, next.iter().copied()).unwrap();
        if is_spider_free(&h, 4) && centre_matching(&h, &centres(&h, 3)).unwrap().is_some() {
            edges = next;
            g = h;
        }
    }
    let m = centre_matching(&g, &centres(&g, 3)).unwrap().expect("kept invariant");
    (g, m)
}

/// Random loopless digraph with arc probability `p`.
pub fn random_digraph(seed: u64, n: usize, p: f64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::from_arcs(n, arcs).unwrap()
}
