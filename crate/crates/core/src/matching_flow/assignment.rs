use std::collections::BTreeMap;
use std::fmt;

use serde::de::Deserializer;
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::flow::FlowNetwork;
use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};
use crate::patterns::non_leaf_counts;
use crate::verify::TrestleCertificate;

/// Non-negative integers on the arcs of a tree's symmetric orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcAssignment {
    n: usize,
    values: BTreeMap<(Vertex, Vertex), u64>,
}

impl ArcAssignment {
    /// All-zero assignment on both arcs of every tree edge.
    pub fn zeros(t: &Tree) -> Self {
        let values = t.edges().flat_map(|(u, v)| [((u, v), 0), ((v, u), 0)]).collect();
        ArcAssignment { n: t.n(), values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Value on arc `from -> to`; zero for arcs that do not exist.
    pub fn value(&self, from: Vertex, to: Vertex) -> u64 {
        self.values.get(&(from, to)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, from: Vertex, to: Vertex, value: u64) -> Result<()> {
        match self.values.get_mut(&(from, to)) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::domain(format!("{from}->{to} is not an arc"))),
        }
    }

    /// Arcs with their values in `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = ((Vertex, Vertex), u64)> + '_ {
        self.values.iter().map(|(&a, &v)| (a, v))
    }

    /// Sum over arcs ending at `v`.
    pub fn in_sum(&self, v: Vertex) -> u64 {
        self.values.iter().filter(|(&(_, h), _)| h == v).map(|(_, &x)| x).sum()
    }

    /// Sum over arcs starting at `v`.
    pub fn out_sum(&self, v: Vertex) -> u64 {
        self.values.range((v, 0)..(v + 1, 0)).map(|(_, &x)| x).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|&x| x == 0)
    }

    /// Every violated condition of the assignment characterisation for
    /// `(t, k)`: `n(v) <= k`, `i(v) = max(0, n(v) - 2)` and
    /// `o(v) <= k - n(v)`. Empty means the assignment qualifies.
    pub fn violations(&self, t: &Tree, k: usize) -> Vec<String> {
        let mut out = Vec::new();
        if self.n != t.n() || self.values.len() != 2 * t.edge_count() {
            out.push("assignment does not match the tree's arcs".to_string());
            return out;
        }
        if let Some(((u, v), _)) = self.arcs().find(|&((u, v), _)| !t.has_edge(u, v)) {
            out.push(format!("{u}->{v} is not an arc of the tree"));
            return out;
        }
        let counts = non_leaf_counts(t.graph());
        for v in 0..t.n() {
            let nv = counts[v];
            if nv > k {
                out.push(format!("n({v})={nv} > k={k}"));
                continue;
            }
            let demand = nv.saturating_sub(2) as u64;
            let i = self.in_sum(v);
            if i != demand {
                out.push(format!("i({v})={i}, expected {demand}"));
            }
            let o = self.out_sum(v);
            if o > (k - nv) as u64 {
                out.push(format!("o({v})={o} > k - n({v}) = {}", k - nv));
            }
        }
        out
    }

    pub fn satisfies(&self, t: &Tree, k: usize) -> bool {
        self.violations(t, k).is_empty()
    }

    /// Copy restricted to the arcs among `vertices`, relabelled by position.
    pub(crate) fn restrict(&self, t_local: &Tree, to_parent: &[Vertex]) -> Self {
        let mut out = ArcAssignment::zeros(t_local);
        for (&(u, v), slot) in out.values.iter_mut() {
            let (pu, pv) = (to_parent[u], to_parent[v]);
            if pu != usize::MAX && pv != usize::MAX {
                *slot = self.value(pu, pv);
            }
        }
        out
    }
}

impl fmt::Display for ArcAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((u, v), x) in self.arcs() {
            writeln!(f, "{u}->{v}: {x}")?;
        }
        Ok(())
    }
}

impl Serialize for ArcAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for ((u, v), x) in self.arcs() {
            map.serialize_entry(&format!("{u}->{v}"), &x)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ArcAssignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, u64>::deserialize(deserializer)?;
        let mut values = BTreeMap::new();
        let mut n = 0;
        for (key, x) in raw {
            let (a, b) = key
                .split_once("->")
                .ok_or_else(|| D::Error::custom(format!("bad arc key {key:?}")))?;
            let u: Vertex = a.trim().parse().map_err(D::Error::custom)?;
            let v: Vertex = b.trim().parse().map_err(D::Error::custom)?;
            n = n.max(u + 1).max(v + 1);
            values.insert((u, v), x);
        }
        Ok(ArcAssignment { n, values })
    }
}

fn check_domain(t: &Tree, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::domain(format!("k must be at least 2, got {k}")));
    }
    if t.n() < 3 {
        return Err(Error::domain(format!("tree needs at least 3 vertices, got {}", t.n())));
    }
    Ok(())
}

/// Integral assignment with `i(v) = max(0, n(v) - 2)` and
/// `o(v) <= k - n(v)` for all `v`, read off a maximum flow, or `None`
/// when some `n(v) > k` or no such assignment exists.
///
/// Network: source -> `v_out` (capacity `k - n(v)`), `u_out -> v_in` for
/// each arc `(u, v)` (effectively unbounded), `v_in` -> sink (capacity
/// `max(0, n(v) - 2)`). Feasible iff the flow saturates every sink arc.
pub fn feasible_assignment(t: &Tree, k: usize) -> Result<Option<ArcAssignment>> {
    check_domain(t, k)?;
    let counts = non_leaf_counts(t.graph());
    if counts.iter().any(|&c| c > k) {
        return Ok(None);
    }
    let n = t.n();
    let demand: Vec<u64> = counts.iter().map(|&c| c.saturating_sub(2) as u64).collect();
    let total: u64 = demand.iter().sum();
    if total == 0 {
        return Ok(Some(ArcAssignment::zeros(t)));
    }
    let unbounded = total + 1;
    let (source, sink) = (2 * n, 2 * n + 1);
    let out_node = |v: Vertex| v;
    let in_node = |v: Vertex| n + v;

    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        net.add_arc(source, out_node(v), (k - counts[v]) as u64);
    }
    let mut arc_ids = Vec::new();
    for u in 0..n {
        for &v in t.neighbors(u) {
            arc_ids.push(((u, v), net.add_arc(out_node(u), in_node(v), unbounded)));
        }
    }
    for v in 0..n {
        if demand[v] > 0 {
            net.add_arc(in_node(v), sink, demand[v]);
        }
    }
    if net.max_flow(source, sink) != total {
        return Ok(None);
    }
    let mut a = ArcAssignment::zeros(t);
    for ((u, v), id) in arc_ids {
        a.set(u, v, net.flow(id))?;
    }
    debug_assert!(a.satisfies(t, k));
    Ok(Some(a))
}

/// Extracts an assignment from a k-trestle of `T^2`: at each non-leaf
/// `x`, `max(0, n(x) - 2)` is spread over the arcs `u -> x` (ascending
/// `u`), each capped one below the degree of `u` in the trestle restricted
/// to the neighbours of `x`.
pub fn assignment_from_trestle(t: &Tree, cert: &TrestleCertificate) -> Result<ArcAssignment> {
    let k = cert.k;
    check_domain(t, k)?;
    if cert.subgraph.n() != t.n() {
        return Err(Error::domain("certificate and tree differ in vertex count"));
    }
    let z = cert.subgraph.to_graph()?;
    let counts = non_leaf_counts(t.graph());
    let mut a = ArcAssignment::zeros(t);
    for x in 0..t.n() {
        if t.is_leaf(x) {
            continue;
        }
        let nbrs = t.neighbors(x);
        let local = z.induced(nbrs);
        if !crate::graph::is_connected(&local) {
            return Err(Error::invariant(format!(
                "trestle restricted to the neighbours of {x} is disconnected"
            )));
        }
        let mut need = counts[x].saturating_sub(2) as u64;
        for (i, &u) in nbrs.iter().enumerate() {
            if need == 0 {
                break;
            }
            let cap = local.degree(i).saturating_sub(1) as u64;
            let take = cap.min(need);
            a.set(u, x, take)?;
            need -= take;
        }
        if need > 0 {
            return Err(Error::invariant(format!("cannot distribute the demand at vertex {x}")));
        }
    }
    let problems = a.violations(t, k);
    if !problems.is_empty() {
        return Err(Error::invariant(format!(
            "extracted assignment violates the characterisation: {problems:?}"
        )));
    }
    Ok(a)
}
