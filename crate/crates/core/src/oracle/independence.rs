use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Vertex};

/// Largest size accepted by the bitmask search.
pub const MAX_INDEPENDENCE_ORDER: usize = 64;

/// A maximum independent set (sorted), by branch and bound over bitmasks.
/// Branches on the closed neighbourhood of a minimum-degree vertex, since
/// some maximum set contains one of its members.
pub fn max_independent_set(g: &Graph) -> Result<Vec<Vertex>> {
    let n = g.n();
    if n > MAX_INDEPENDENCE_ORDER {
        return Err(Error::domain(format!(
            "independence search limited to {MAX_INDEPENDENCE_ORDER} vertices, got {n}"
        )));
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    branch(&closed, all, 0, &mut best);
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

fn branch(closed: &[u64], candidates: u64, chosen: u64, best: &mut u64) {
    if candidates == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let mut pivot = 0;
    let mut pivot_degree = u32::MAX;
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (closed[v] & candidates).count_ones();
        if d < pivot_degree {
            pivot = v;
            pivot_degree = d;
        }
    }
    let mut options = closed[pivot] & candidates;
    while options != 0 {
        let v = options.trailing_zeros() as usize;
        options &= options - 1;
        branch(closed, candidates & !closed[v], chosen | 1 << v, best);
    }
}

/// Independence number of a digraph: that of its underlying graph.
pub fn digraph_independence_number(d: &Digraph) -> Result<usize> {
    Ok(max_independent_set(&d.underlying())?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_values() {
        assert_eq!(max_independent_set(&Graph::complete(6)).unwrap().len(), 1);
        assert_eq!(max_independent_set(&Graph::empty(5)).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(max_independent_set(&Graph::cycle(5)).unwrap().len(), 2);
        assert_eq!(max_independent_set(&Graph::path(7)).unwrap().len(), 4);
        assert_eq!(max_independent_set(&Graph::empty(0)).unwrap().len(), 0);
    }

    #[test]
    fn result_is_independent() {
        let g = Graph::spider(4);
        let s = max_independent_set(&g).unwrap();
        assert!(g.is_independent(&s));
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn guard() {
        assert!(max_independent_set(&Graph::empty(65)).is_err());
        assert_eq!(max_independent_set(&Graph::empty(64)).unwrap().len(), 64);
    }
}
