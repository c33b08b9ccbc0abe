//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line before asserting.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use trestle::general_trestle::build_general_trestle;
use trestle::graph::is_two_connected;
use trestle::obstruction::{check_obstruction, derive_base_patterns, FFamilyMember};
use trestle::oracle::{
    brute_force_square_trestle, enumerate_connected_graphs, enumerate_trees, fleischner_hamilton, SearchBudget,
    SearchOutcome,
};
use trestle::path_cover::{gallai_milgram_cover, linear_forest_for, PathCover};
use trestle::patterns::is_spider_free;
use trestle::tree_trestle::{build_tree_trestle, decide_tree_trestle, TreeVerdict};
use trestle::{verify_trestle, ArcAssignment, Digraph, Graph, Tree};

/// Largest tree order of the exhaustive suites.
const MAX_TREE_ORDER: usize = 12;
/// Wall-clock allowance for criterion 1, single-threaded.
const CRITERION_1_LIMIT: Duration = Duration::from_secs(15 * 60);
/// Wall-clock allowance for each impossibility anchor.
const ANCHOR_LIMIT: Duration = Duration::from_secs(10);
/// Generated instances for criterion 5 and their order bound.
const GENERAL_INSTANCES: usize = 250;
const GENERAL_MAX_ORDER: usize = 40;
/// Random instances per family in criterion 8, and their order bound.
const PATH_COVER_INSTANCES: usize = 500;
const PATH_COVER_MAX_ORDER: usize = 12;
/// Order bound of the exhaustive Hamilton check in criterion 9.
const FLEISCHNER_MAX_ORDER: usize = 8;
/// Enumeration bound for the base-pattern derivation.
const DERIVATION_ORDER: usize = 23;

fn report(criterion: u32, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn all_trees() -> Vec<Tree> {
    (3..=MAX_TREE_ORDER).flat_map(|n| enumerate_trees(n).unwrap()).collect()
}

fn non_leaf(g: &Graph, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&w| g.degree(w) > 1).count()
}

/// Spine test: the non-leaves induce a path (or nothing).
fn caterpillar(g: &Graph) -> bool {
    let spine: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 1).collect();
    let inner = |v: usize| g.neighbors(v).iter().filter(|w| spine.contains(w)).count();
    let ends = spine.iter().filter(|&&v| inner(v) <= 1).count();
    spine.iter().all(|&v| inner(v) <= 2) && (spine.len() <= 1 || ends == 2)
}

fn out_sum(a: &ArcAssignment, v: usize) -> u64 {
    a.arcs().filter(|((from, _), _)| *from == v).map(|(_, x)| x).sum()
}

#[test]
fn criterion_1_decision_matches_search() {
    let started = Instant::now();
    let trees = all_trees();
    let (mut disagreements, mut exhausted, mut checked) = (0, 0, 0);
    for k in 2..=4 {
        for t in &trees {
            let decided = decide_tree_trestle(t, k).unwrap().is_feasible();
            match brute_force_square_trestle(t.graph(), k, SearchBudget::default()).unwrap() {
                SearchOutcome::Found(_) if decided => {}
                SearchOutcome::NoneExists if !decided => {}
                SearchOutcome::Exhausted => exhausted += 1,
                _ => disagreements += 1,
            }
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    report(
        1,
        disagreements == 0 && exhausted == 0 && elapsed <= CRITERION_1_LIMIT,
        &format!("{checked} tree/k cases, {disagreements} disagreements, {exhausted} exhausted, {elapsed:.1?}"),
    );
}

#[test]
fn criterion_2_constructive_degree_law() {
    let (mut built, mut failures) = (0, 0);
    for k in 2..=4 {
        for t in &all_trees() {
            let TreeVerdict::Feasible(a) = decide_tree_trestle(t, k).unwrap() else {
                continue;
            };
            let g = t.graph();
            let expected: Vec<usize> = (0..t.n())
                .map(|v| out_sum(&a, v) as usize + non_leaf(g, v).max(2))
                .collect();
            let ok = build_tree_trestle(t, k, &a).is_ok_and(|cert| {
                let cert = cert.with_expected_degrees(expected.clone());
                verify_trestle(&cert).passed() && cert.degrees() == expected
            });
            built += 1;
            failures += usize::from(!ok);
        }
    }
    report(
        2,
        failures == 0,
        &format!("{built} feasible cases built, {failures} degree or verification failures"),
    );
}

#[test]
fn criterion_3_hamiltonian_case() {
    let (mut checked, mut mismatches) = (0, 0);
    for t in &all_trees() {
        let verdict = decide_tree_trestle(t, 2).unwrap();
        let cat = caterpillar(t.graph());
        let claw_free = is_spider_free(t.graph(), 3);
        let zero = match &verdict {
            TreeVerdict::Feasible(a) => a.is_zero(),
            TreeVerdict::Infeasible { .. } => false,
        };
        if verdict.is_feasible() != cat || cat != claw_free || verdict.is_feasible() != zero {
            mismatches += 1;
        }
        checked += 1;
    }
    report(3, mismatches == 0, &format!("{checked} trees, {mismatches} mismatches"));
}

#[test]
fn criterion_4_impossibility_anchors() {
    let mut details = Vec::new();
    let mut pass = true;
    for (legs, k) in [(4, 3), (3, 2)] {
        let started = Instant::now();
        let outcome = brute_force_square_trestle(&Graph::spider(legs), k, SearchBudget::default()).unwrap();
        let elapsed = started.elapsed();
        let ok = outcome.is_none_exists() && elapsed <= ANCHOR_LIMIT;
        pass &= ok;
        details.push(format!(
            "S(K_1,{legs}) k={k}: {} in {elapsed:.1?}",
            if ok { "none" } else { "not refuted" }
        ));
    }
    report(4, pass, &details.join(", "));
}

#[test]
fn criterion_5_general_construction_at_scale() {
    let mut rng = common::rng(20_240_601);
    let (mut built, mut failures, mut claw_free, mut with_centres, mut max_n) = (0, 0, 0, 0, 0);
    while built < GENERAL_INSTANCES {
        let Some((g, m)) = common::centred_instance(&mut rng, GENERAL_MAX_ORDER) else {
            continue;
        };
        let ok = build_general_trestle(&g, &m).is_ok_and(|cert| {
            let degrees = cert.degrees();
            let mut ok =
                verify_trestle(&cert).passed() && cert.k == 3 && (0..g.n()).all(|v| m.covers(v) || degrees[v] == 2);
            if is_spider_free(&g, 3) {
                ok &= degrees.iter().all(|&d| d == 2);
            }
            ok
        });
        claw_free += usize::from(is_spider_free(&g, 3));
        with_centres += usize::from(!m.is_empty());
        max_n = max_n.max(g.n());
        failures += usize::from(!ok);
        built += 1;
    }
    report(
        5,
        failures == 0,
        &format!(
            "{built} graphs up to {max_n} vertices, {with_centres} with centres, {claw_free} S(K_1,3)-free, {failures} failures"
        ),
    );
}

#[test]
fn criterion_6_corollary_equivalence() {
    let (mut checked, mut mismatches, mut bad_witnesses) = (0, 0, 0);
    for t in &all_trees() {
        let witness = check_obstruction(t).unwrap();
        let decided = decide_tree_trestle(t, 3).unwrap().is_feasible();
        let searched = brute_force_square_trestle(t.graph(), 3, SearchBudget::default())
            .unwrap()
            .is_found();
        if witness.is_none() != decided || decided != searched {
            mismatches += 1;
        }
        if let Some(w) = &witness {
            bad_witnesses += usize::from(!w.violations(t).is_empty());
        }
        checked += 1;
    }
    report(
        6,
        mismatches == 0 && bad_witnesses == 0,
        &format!("{checked} trees, {mismatches} mismatches, {bad_witnesses} unsound witnesses"),
    );
}

/// The predicted minimum obstruction: a degree-3 centre whose neighbours
/// each have two non-leaf children carrying one leaf.
fn predicted_t0() -> FFamilyMember {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..3 {
        let r = next;
        edges.push((0, r));
        next += 1;
        for _ in 0..2 {
            edges.push((r, next));
            edges.push((next, next + 1));
            next += 2;
        }
    }
    FFamilyMember::new(&Tree::new(Graph::from_edges(next, edges).unwrap()).unwrap(), &[0])
}

#[test]
fn criterion_7_base_pattern_derivation() {
    let started = Instant::now();
    let d = derive_base_patterns(DERIVATION_ORDER, SearchBudget::default()).unwrap();
    let t0 = d.t0.as_ref();
    let a = d.attachment.as_ref();
    let t0_n = t0.map_or(0, |t| t.n());
    let a_n = a.map_or(0, |a| a.tree.n());
    let matches_prediction = t0 == Some(&predicted_t0());
    let next_order = t0_n + a_n - 5 - 1;
    let new_at_next = d
        .levels
        .iter()
        .find(|l| l.n == next_order)
        .map_or(0, |l| l.new_obstructions.len());
    report(
        7,
        d.is_complete() && t0_n == 16 && matches_prediction,
        &format!(
            "T_0 on {t0_n} vertices ({}), A on {a_n} vertices, {new_at_next} new obstructions at order {next_order} \
             reproduced by composition, {} exhaustive refutations, {:.1?}",
            if matches_prediction {
                "matches prediction"
            } else {
                "differs from prediction"
            },
            d.searches.iter().filter(|s| s.outcome == "none").count(),
            started.elapsed()
        ),
    );
}

/// Independence number by trying every vertex subset.
fn brute_independence(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> usize {
    (0u32..1 << n)
        .filter(|&mask| (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || !adjacent(u, v))))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether some path cover of `d` has pairwise non-adjacent starts, by
/// trying every vertex order and every way of cutting it into paths.
fn start_independent_cover_exists(d: &Digraph) -> bool {
    fn orders(prefix: &mut Vec<usize>, left: &mut Vec<usize>, d: &Digraph, found: &mut bool) {
        if *found {
            return;
        }
        if left.is_empty() {
            let n = prefix.len();
            for cuts in 0u32..1 << n.saturating_sub(1) {
                let mut starts = vec![prefix[0]];
                let mut ok = true;
                for i in 1..n {
                    if cuts >> (i - 1) & 1 == 1 {
                        starts.push(prefix[i]);
                    } else if !d.has_arc(prefix[i - 1], prefix[i]) {
                        ok = false;
                        break;
                    }
                }
                if ok && PathCover::is_independent_in(d, &starts) {
                    *found = true;
                    return;
                }
            }
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            orders(prefix, left, d, found);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut found = false;
    orders(&mut Vec::new(), &mut (0..d.n()).collect(), d, &mut found);
    found
}

#[test]
fn criterion_8_path_covers_and_linear_forests() {
    let mut rng = common::rng(8);
    let (mut invalid, mut too_large, mut dependent_starts, mut no_transversal) = (0, 0, 0, 0);
    let (mut small_dependent, mut small_impossible) = (0, 0);
    for _ in 0..PATH_COVER_INSTANCES {
        let n = rng.gen_range(1..=PATH_COVER_MAX_ORDER);
        let p = rng.gen_range(0.05..0.6);
        let d = common::random_digraph(&mut rng, n, p);
        let cover = gallai_milgram_cover(&d);
        let alpha = brute_independence(n, |u, v| d.has_arc(u, v) || d.has_arc(v, u));
        invalid += usize::from(!cover.is_valid_for(&d));
        too_large += usize::from(cover.paths.len() > alpha);
        no_transversal += usize::from(!cover.certificate_holds(&d));
        if !cover.starts_independent(&d) {
            dependent_starts += 1;
            if n <= 7 {
                small_dependent += 1;
                small_impossible += usize::from(!start_independent_cover_exists(&d));
            }
        }
    }
    let (mut bad_forest, mut forest_too_large, mut not_respecting) = (0, 0, 0);
    for _ in 0..PATH_COVER_INSTANCES {
        let n = rng.gen_range(1..=PATH_COVER_MAX_ORDER);
        let p = rng.gen_range(0.05..0.7);
        let g = common::random_graph(&mut rng, n, p);
        let mut ends: Vec<usize> = Vec::new();
        for v in 0..n {
            if rng.gen_bool(0.3) && ends.iter().all(|&u| !g.has_edge(u, v)) {
                ends.push(v);
            }
        }
        let alpha = brute_independence(n, |u, v| g.has_edge(u, v));
        match linear_forest_for(&g, &ends) {
            Ok(f) => {
                bad_forest += usize::from(!f.is_valid_for(&g));
                forest_too_large += usize::from(f.component_count() > alpha);
                not_respecting += usize::from(!f.respects(&ends));
            }
            Err(_) => bad_forest += 1,
        }
    }
    let out_star = Digraph::from_arcs(3, [(0, 1), (0, 2)]).unwrap();
    report(
        8,
        invalid + too_large + no_transversal + dependent_starts + bad_forest + forest_too_large + not_respecting == 0,
        &format!(
            "digraphs: {invalid} invalid, {too_large} above independence, {no_transversal} without independent \
             transversal, {dependent_starts} with dependent starts ({small_dependent} of them on at most 7 vertices, \
             {small_impossible} of those admit no start-independent cover at all; out-star 0->1, 0->2 admits one: {}); \
             linear forests: {bad_forest} invalid, {forest_too_large} above independence, {not_respecting} with a bad end",
            start_independent_cover_exists(&out_star)
        ),
    );
}

/// Hamilton cycle of `g^2`, checked with distances recomputed here.
fn is_square_hamilton_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let close = |u: usize, v: usize| g.has_edge(u, v) || g.neighbors(u).iter().any(|&x| g.has_edge(x, v));
    cycle.len() == n && (0..n).all(|i| close(cycle[i], cycle[(i + 1) % n]))
}

#[test]
fn criterion_9_fleischner_stand_in() {
    let (mut graphs, mut failures) = (0, 0);
    let mut counts = Vec::new();
    for n in 3..=FLEISCHNER_MAX_ORDER {
        let blocks: Vec<Graph> = enumerate_connected_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| is_two_connected(g).unwrap())
            .collect();
        counts.push(blocks.len());
        for g in &blocks {
            let ok = fleischner_hamilton(g, SearchBudget::default()).is_ok_and(|c| is_square_hamilton_cycle(g, &c));
            failures += usize::from(!ok);
            graphs += 1;
        }
    }
    // 2-connected graphs on 3..=8 vertices
    let expected = [1, 3, 10, 56, 468, 7123];
    report(
        9,
        failures == 0 && counts == expected,
        &format!("{graphs} 2-connected graphs (per order {counts:?}), {failures} failures"),
    );
}
