//! Independent certificate checking.
//!
//! Nothing here reuses the builders' machinery: distances are recomputed
//! from the base graph's adjacency and 2-connectivity by a lowpoint search
//! written here, so a verifier pass is evidence that does not depend on
//! the construction being right.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSubgraph, Graph, Vertex};
use crate::matching_flow::Matching;

/// A claimed k-trestle `Z` of the square of `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrestleCertificate {
    /// The graph `G` whose square must contain `Z`.
    pub base: Graph,
    pub subgraph: EdgeSubgraph,
    pub k: usize,
    /// When present, every vertex of degree at least 3 must be matched.
    pub matching: Option<Matching>,
    /// When present, degrees must match exactly.
    pub expected_degrees: Option<Vec<usize>>,
}

impl TrestleCertificate {
    pub fn new(base: Graph, edges: impl IntoIterator<Item = Edge>, k: usize) -> Self {
        let subgraph = EdgeSubgraph::unchecked(base.n(), edges);
        TrestleCertificate {
            base,
            subgraph,
            k,
            matching: None,
            expected_degrees: None,
        }
    }

    pub fn with_matching(mut self, m: Matching) -> Self {
        self.matching = Some(m);
        self
    }

    pub fn with_expected_degrees(mut self, d: Vec<usize>) -> Self {
        self.expected_degrees = Some(d);
        self
    }

    pub fn edges(&self) -> &[Edge] {
        self.subgraph.edges()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.subgraph.degrees()
    }

    pub fn to_document(&self) -> CertificateDocument {
        CertificateDocument {
            k: self.k,
            n: self.base.n(),
            edges: self.edges().to_vec(),
            degrees: self.degrees(),
            cycle: self.subgraph.as_cycle(),
            matching: self.matching.as_ref().map(|m| m.pairs().to_vec()),
            expected_degrees: self.expected_degrees.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("certificate serialises")
    }

    /// Rebuilds a certificate for `base` from its JSON document.
    pub fn from_json(base: Graph, json: &str) -> Result<Self> {
        let doc: CertificateDocument = serde_json::from_str(json)?;
        if doc.n != base.n() {
            return Err(Error::domain(format!(
                "certificate is for {} vertices, graph has {}",
                doc.n,
                base.n()
            )));
        }
        let matching = doc.matching.map(|pairs| Matching::new(None, pairs)).transpose()?;
        Ok(TrestleCertificate {
            subgraph: EdgeSubgraph::unchecked(base.n(), doc.edges),
            base,
            k: doc.k,
            matching,
            expected_degrees: doc.expected_degrees,
        })
    }
}

/// Serialised form of a certificate: edge list, per-vertex degrees and k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Edge>,
    #[serde(default)]
    pub degrees: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<Edge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_degrees: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    fn push(&mut self, check: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            check: check.to_string(),
            pass,
            detail: detail.into(),
        });
    }
}

pub const CHECK_WELL_FORMED: &str = "well_formed";
pub const CHECK_SUBSET: &str = "subset_of_square";
pub const CHECK_SPANNING: &str = "spanning";
pub const CHECK_TWO_CONNECTED: &str = "two_connected";
pub const CHECK_MAX_DEGREE: &str = "max_degree";
pub const CHECK_MATCHED: &str = "high_degree_matched";
pub const CHECK_DEGREES: &str = "expected_degrees";

/// Runs every applicable check on `cert`.
pub fn verify_trestle(cert: &TrestleCertificate) -> VerifyReport {
    let within = |u: Vertex, v: Vertex| within_two(&cert.base, u, v);
    verify_against(cert.base.n(), cert.subgraph.edges(), cert.k, within, cert)
}

/// Checks that `edges` form a k-trestle of `host` itself (not of its
/// square). Used for search results on arbitrary host graphs.
pub fn verify_trestle_in(host: &Graph, edges: &[Edge], k: usize) -> VerifyReport {
    let cert = TrestleCertificate::new(host.clone(), edges.iter().copied(), k);
    verify_against(host.n(), edges, k, |u, v| host.has_edge(u, v), &cert)
}

fn verify_against<F>(n: usize, edges: &[Edge], k: usize, allowed: F, cert: &TrestleCertificate) -> VerifyReport
where
    F: Fn(Vertex, Vertex) -> bool,
{
    let mut report = VerifyReport { checks: Vec::new() };

    let bad: Vec<&Edge> = edges.iter().filter(|&&(u, v)| u == v || u >= n || v >= n).collect();
    let mut dedup = edges.to_vec();
    dedup.sort_unstable();
    dedup.dedup();
    let well_formed = bad.is_empty() && dedup.len() == edges.len();
    report.push(
        CHECK_WELL_FORMED,
        well_formed,
        if well_formed {
            format!("{} distinct edges", edges.len())
        } else {
            format!("invalid or repeated edges: {bad:?}")
        },
    );
    if !well_formed {
        return report;
    }

    let outside: Vec<&Edge> = edges.iter().filter(|&&(u, v)| !allowed(u, v)).collect();
    report.push(
        CHECK_SUBSET,
        outside.is_empty(),
        if outside.is_empty() {
            "all edges join vertices at distance 1 or 2".to_string()
        } else {
            format!("edges outside the host: {outside:?}")
        },
    );

    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let uncovered: Vec<Vertex> = (0..n).filter(|&v| adj[v].is_empty()).collect();
    report.push(
        CHECK_SPANNING,
        n > 0 && uncovered.is_empty(),
        if uncovered.is_empty() {
            format!("all {n} vertices covered")
        } else {
            format!("uncovered vertices: {uncovered:?}")
        },
    );

    let (two_conn, detail) = two_connected(&adj);
    report.push(CHECK_TWO_CONNECTED, two_conn, detail);

    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    report.push(
        CHECK_MAX_DEGREE,
        max_deg <= k,
        format!("maximum degree {max_deg}, bound {k}"),
    );

    if let Some(m) = &cert.matching {
        let unmatched: Vec<Vertex> = (0..n).filter(|&v| adj[v].len() >= 3 && !m.covers(v)).collect();
        report.push(
            CHECK_MATCHED,
            unmatched.is_empty(),
            if unmatched.is_empty() {
                "every vertex of degree >= 3 is matched".to_string()
            } else {
                format!("unmatched vertices of degree >= 3: {unmatched:?}")
            },
        );
    }

    if let Some(expected) = &cert.expected_degrees {
        let wrong: Vec<(Vertex, usize, usize)> = (0..n)
            .filter(|&v| expected.get(v) != Some(&adj[v].len()))
            .map(|v| (v, adj[v].len(), expected.get(v).copied().unwrap_or(usize::MAX)))
            .collect();
        let ok = wrong.is_empty() && expected.len() == n;
        report.push(
            CHECK_DEGREES,
            ok,
            if ok {
                "degrees match exactly".to_string()
            } else {
                format!("(vertex, actual, expected) mismatches: {wrong:?}")
            },
        );
    }
    report
}

fn within_two(g: &Graph, u: Vertex, v: Vertex) -> bool {
    if u >= g.n() || v >= g.n() || u == v {
        return false;
    }
    g.neighbors(u).iter().any(|&w| w == v || g.neighbors(w).contains(&v))
}

/// Iterative lowpoint DFS from vertex 0: connected, and no vertex
/// separates a DFS child's subtree from the rest.
fn two_connected(adj: &[Vec<Vertex>]) -> (bool, String) {
    let n = adj.len();
    if n < 3 {
        return (false, format!("2-connectivity needs n >= 3, got {n}"));
    }
    const UNSEEN: usize = usize::MAX;
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut parent = vec![UNSEEN; n];
    let mut next_edge = vec![0; n];
    let mut root_children = 0;
    let mut time = 0;
    order[0] = 0;
    low[0] = 0;
    let mut stack = vec![0];
    while let Some(&v) = stack.last() {
        if let Some(&w) = adj[v].get(next_edge[v]) {
            next_edge[v] += 1;
            if order[w] == UNSEEN {
                time += 1;
                order[w] = time;
                low[w] = time;
                parent[w] = v;
                root_children += usize::from(v == 0);
                stack.push(w);
            } else if w != parent[v] {
                low[v] = low[v].min(order[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != UNSEEN {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= order[p] {
                    return (false, format!("vertex {p} is a cutvertex"));
                }
            }
        }
    }
    if time + 1 != n {
        return (false, "disconnected".to_string());
    }
    if root_children > 1 {
        return (false, "vertex 0 is a cutvertex".to_string());
    }
    (true, "connected after deleting any single vertex".to_string())
}

/// Convenience used by builders: turns a failed report into an
/// invariant error carrying the failures.
pub(crate) fn ensure_passes(report: &VerifyReport, context: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::invariant(format!(
            "{context}: certificate rejected: {}",
            serde_json::to_string(&report.failures()).unwrap_or_default()
        )))
    }
}
