use std::collections::BTreeMap;

use super::canon::{canonical_graph, graph_code, GraphCode};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the exhaustive graph generators.
pub const MAX_ENUMERATED_ORDER: usize = 8;

/// One representative of every isomorphism class of graphs on `n`
/// vertices, in canonical-code order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    grow(n, false)
}

/// As [`enumerate_graphs`], restricted to connected graphs.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    grow(n, true)
}

/// Every graph on `m` vertices arises from one on `m - 1` by adding a
/// vertex with some neighbourhood; every connected one arises from a
/// connected one (delete a non-cutvertex). Candidates are deduplicated by
/// canonical code.
fn grow(n: usize, connected: bool) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(Error::domain(format!(
            "graph enumeration limited to {MAX_ENUMERATED_ORDER} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(if connected { Vec::new() } else { vec![Graph::empty(0)] });
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen: BTreeMap<GraphCode, Graph> = BTreeMap::new();
        for parent in &level {
            let base: Vec<(usize, usize)> = parent.edges().collect();
            let first = usize::from(connected);
            for mask in first..1usize << (m - 1) {
                let extra = (0..m - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, m - 1));
                let g = Graph::from_edges_unchecked(m, base.iter().copied().chain(extra));
                let code = graph_code(&g);
                seen.entry(code).or_insert_with(|| canonical_graph(&g));
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}
