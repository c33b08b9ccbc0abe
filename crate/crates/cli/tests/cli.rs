use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use trestle::obstruction::{AttachmentPattern, FFamilyMember, PatternDerivation};
use trestle::oracle::tree_count;
use trestle::{Graph, Tree};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trestle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn edgelist(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

const SPIDER4: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (4, 8)];
const P5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4)];

fn t0_edges() -> Vec<(usize, usize)> {
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
    edges
}

#[test]
fn decide_spider_is_infeasible() {
    let out = run(&["decide", "--k", "3"], &edgelist(SPIDER4));
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["feasible"], false);
    assert!(doc["reason"].as_str().unwrap().contains("n(v)=4 > k"));
}

#[test]
fn decide_feasible_reports_degrees() {
    let out = run(&["decide", "--k", "3"], &edgelist(SPIDER4[..7].as_ref()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["feasible"], true);
}

#[test]
fn build_path_square_cycle() {
    let out = run(&["build", "--k", "2"], &edgelist(P5));
    assert_eq!(out.status.code(), Some(0));
    let cycle: Vec<u64> = json(&out)["cycle"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(cycle, vec![0, 2, 4, 3, 1]);
}

#[test]
fn build_general_graph_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    // two triangles joined by a path, plus a pendant path
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 4),
        (6, 7),
        (7, 8),
    ];
    let input = dir.path().join("g.txt");
    std::fs::write(&input, edgelist(&edges)).unwrap();
    let cert = dir.path().join("cert.json");
    let dot = dir.path().join("z.dot");
    let out = run(
        &[
            "build",
            "--k",
            "3",
            input.to_str().unwrap(),
            "-o",
            cert.to_str().unwrap(),
            "--dot",
            dot.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph G {"));
    let out = run(
        &["verify", input.to_str().unwrap(), "--cert", cert.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    doc["edges"].as_array_mut().unwrap().pop();
    std::fs::write(&cert, doc.to_string()).unwrap();
    let out = run(
        &["verify", input.to_str().unwrap(), "--cert", cert.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn validate_reports_agreement() {
    let out = run(&["validate", "--max-n", "10", "--k", "3", "--jobs", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    let count: u64 = (3..=10).map(tree_count).sum();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(&format!("agree: {count}/{count}")), "{text}");
}

#[test]
fn obstruction_witness_for_t0() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("w.dot");
    let out = run(&["obstruction", "--dot", dot.to_str().unwrap()], &edgelist(&t0_edges()));
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["obstruction"]["kind"], "subtree");
    assert_eq!(doc["obstruction"]["special"], serde_json::json!([0]));
    assert!(std::fs::read_to_string(&dot).unwrap().contains("fillcolor=white"));

    let out = run(&["obstruction"], &edgelist(P5));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["obstruction"], Value::Null);
}

#[test]
fn square_round_trips_graph6() {
    let out = run(&["square"], "C~\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "C~\n");
    let out = run(&["square", "--format", "edgelist"], &edgelist(P5[..2].as_ref()));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n=3\n0 1\n0 2\n1 2\n");
}

#[test]
fn centres_lists_spider_centre() {
    let out = run(&["centres", "--k", "4"], &edgelist(SPIDER4));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["centres"], serde_json::json!([0]));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&[], "").status.code(), Some(2));
    assert_eq!(run(&["decide"], "").status.code(), Some(2));
    assert_eq!(run(&["decide", "--k", "3"], "0 x\n").status.code(), Some(2));
    // not a tree
    assert_eq!(run(&["decide", "--k", "3"], "0 1\n1 2\n2 0\n").status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let input = edgelist(&t0_edges()[..13]);
    let a = run(&["build", "--k", "3"], &input);
    let b = run(&["build", "--k", "3"], &input);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn derive_below_threshold_is_undetermined() {
    let out = run(&["derive-patterns", "--max-n", "12"], "");
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["t0"], Value::Null);
    assert!(!doc["notes"].as_array().unwrap().is_empty());
}

#[test]
fn gen_family_from_patterns_file() {
    let t0 = Tree::new(Graph::from_edges(16, t0_edges()).unwrap()).unwrap();
    // v - b - w, with two red branches at w
    let mut a_edges = vec![(0, 1), (1, 2)];
    let mut next = 3;
    for _ in 0..2 {
        let r = next;
        a_edges.push((2, r));
        a_edges.push((r, r + 1));
        a_edges.push((r + 1, r + 2));
        a_edges.push((r, r + 3));
        a_edges.push((r + 3, r + 4));
        next += 5;
    }
    let a = AttachmentPattern {
        tree: Tree::new(Graph::from_edges(13, a_edges).unwrap()).unwrap(),
        v: 0,
        w: 2,
    };
    let d = PatternDerivation {
        max_n: 23,
        t0: Some(FFamilyMember::new(&t0, &[0])),
        attachment: Some(a),
        levels: Vec::new(),
        searches: Vec::new(),
        composition_validated: true,
        notes: Vec::new(),
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("patterns.json");
    std::fs::write(&path, d.to_json()).unwrap();
    let out = run(
        &["gen-family", "--max-n", "30", "--patterns", path.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let sizes: Vec<u64> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["n"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes.first(), Some(&16));
    assert!(sizes.contains(&23) && sizes.contains(&30));
    assert!(sizes.iter().all(|&n| n <= 30 && (n - 16) % 7 == 0));
}
