use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use trestle::io::{from_edgelist, from_graph6, to_dot, to_dot_with, to_graph6, write_graph, Format};
use trestle::obstruction::{derive_base_patterns, f_family, PatternDerivation};
use trestle::oracle::{brute_force_square_trestle, enumerate_trees};
use trestle::patterns::{centres, centres_with_witnesses, is_spider_free};
use trestle::tree_trestle::degree_formula;
use trestle::{
    build_general_trestle, build_tree_trestle, centre_matching, check_obstruction, decide_tree_trestle, square,
    verify_trestle, Error, Graph, Result, SearchBudget, SearchOutcome, Tree, TreeVerdict, TrestleCertificate,
};

use crate::args::{Cli, Command, InputFormat, Io, Search};
use crate::Outcome;

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Square(io) => {
            let (g, format) = read_input(&io)?;
            write_output(io.output.as_deref(), &write_graph(&square(&g), format))?;
            Ok(Outcome::Ok)
        }
        Command::Centres { io, k } => {
            let (g, _) = read_input(&io)?;
            if k < 2 {
                return Err(Error::Domain("spider order must be at least 2".into()));
            }
            let witnesses = centres_with_witnesses(&g, k);
            let doc = json!({
                "k": k,
                "centres": witnesses.iter().map(|w| w.centre).collect::<Vec<_>>(),
                "witnesses": witnesses,
            });
            emit(io.output.as_deref(), &doc)?;
            Ok(Outcome::Ok)
        }
        Command::Decide { io, k } => {
            let (g, _) = read_input(&io)?;
            let t = Tree::new(g)?;
            let verdict = decide_tree_trestle(&t, k)?;
            emit(io.output.as_deref(), &verdict_json(&t, k, &verdict))?;
            Ok(if verdict.is_feasible() {
                Outcome::Ok
            } else {
                Outcome::Verdict
            })
        }
        Command::Build { io, k, dot } => build(&io, k, dot.as_deref()),
        Command::Verify { io, cert } => {
            let (g, _) = read_input(&io)?;
            let text = fs::read_to_string(&cert)?;
            let cert = TrestleCertificate::from_json(g, &text)?;
            let report = verify_trestle(&cert);
            let doc = json!({ "passed": report.passed(), "checks": report });
            emit(io.output.as_deref(), &doc)?;
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Verdict })
        }
        Command::Obstruction { io, dot } => {
            let (g, _) = read_input(&io)?;
            let t = Tree::new(g)?;
            let witness = check_obstruction(&t)?;
            if let Some(path) = dot {
                let text = witness
                    .as_ref()
                    .map_or_else(|| to_dot(t.graph(), &[]), |w| w.to_dot(&t));
                fs::write(path, text)?;
            }
            let doc = json!({ "obstruction": witness });
            emit(io.output.as_deref(), &doc)?;
            Ok(if witness.is_some() {
                Outcome::Verdict
            } else {
                Outcome::Ok
            })
        }
        Command::DerivePatterns { max_n, search, output } => {
            let d = derive_base_patterns(max_n, budget(&search))?;
            write_output(output.as_deref(), format!("{}\n", d.to_json()).as_bytes())?;
            Ok(if d.is_complete() { Outcome::Ok } else { Outcome::Verdict })
        }
        Command::GenFamily {
            max_n,
            patterns,
            search,
            output,
        } => {
            let d: PatternDerivation = match patterns {
                Some(path) => serde_json::from_str(&fs::read_to_string(path)?)?,
                None => derive_base_patterns(23, budget(&search))?,
            };
            let Some(base) = d.base_patterns() else {
                eprintln!("trestle: base patterns undetermined: {}", d.notes.join("; "));
                return Ok(Outcome::Verdict);
            };
            let members: Vec<Value> = f_family(&base, max_n)
                .iter()
                .map(|m| json!({ "n": m.n(), "graph6": to_graph6(m.tree.graph()), "special": m.special }))
                .collect();
            emit(output.as_deref(), &Value::Array(members))?;
            Ok(Outcome::Ok)
        }
        Command::Validate {
            max_n,
            k,
            jobs,
            search,
            output,
        } => validate(max_n, k, jobs, &search, output.as_deref()),
    }
}

fn budget(search: &Search) -> SearchBudget {
    SearchBudget::nodes(search.budget_nodes)
}

fn read_input(io: &Io) -> Result<(Graph, Format)> {
    let mut bytes = Vec::new();
    match &io.input {
        Some(path) => bytes = fs::read(path)?,
        None => {
            std::io::stdin().read_to_end(&mut bytes)?;
        }
    }
    let format = match io.format {
        Some(InputFormat::Graph6) => Format::Graph6,
        Some(InputFormat::Edgelist) => Format::Edgelist,
        None => detect(&bytes),
    };
    let g = match format {
        Format::Graph6 => from_graph6(&bytes)?,
        _ => from_edgelist(&bytes)?,
    };
    Ok((g, format))
}

/// graph6 is a single token; edge lists have pairs or an `n=` header.
fn detect(bytes: &[u8]) -> Format {
    let text = String::from_utf8_lossy(bytes);
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("n=") || first.split_whitespace().count() != 1 {
        Format::Edgelist
    } else {
        Format::Graph6
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn emit(path: Option<&Path>, doc: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    write_output(path, text.as_bytes())
}

fn verdict_json(t: &Tree, k: usize, verdict: &TreeVerdict) -> Value {
    match verdict {
        TreeVerdict::Feasible(a) => json!({
            "k": k,
            "feasible": true,
            "assignment": a,
            "degrees": degree_formula(t, a),
        }),
        TreeVerdict::Infeasible { reason } => json!({ "k": k, "feasible": false, "reason": reason }),
    }
}

fn build(io: &Io, k: usize, dot: Option<&Path>) -> Result<Outcome> {
    let (g, _) = read_input(io)?;
    let cert = match Tree::new(g.clone()) {
        Ok(t) => match decide_tree_trestle(&t, k)? {
            TreeVerdict::Feasible(a) => build_tree_trestle(&t, k, &a)?,
            verdict => {
                emit(io.output.as_deref(), &verdict_json(&t, k, &verdict))?;
                return Ok(Outcome::Verdict);
            }
        },
        Err(_) => {
            if k < 2 {
                return Err(Error::Domain(format!("k must be at least 2, got {k}")));
            }
            if !is_spider_free(&g, 4) {
                return Err(Error::Domain(
                    "graph contains an induced S(K_{1,4}); no construction applies".into(),
                ));
            }
            let x = centres(&g, 3);
            if k == 2 && !x.is_empty() {
                return Err(Error::Domain(
                    "k = 2 needs a graph without an induced S(K_{1,3})".into(),
                ));
            }
            let Some(m) = centre_matching(&g, &x)? else {
                return Err(Error::Domain(
                    "no matching covers the centres of induced S(K_{1,3}); no construction applies".into(),
                ));
            };
            let mut cert = build_general_trestle(&g, &m)?;
            cert.k = k;
            cert
        }
    };
    let report = verify_trestle(&cert);
    if !report.passed() {
        return Err(Error::Invariant(format!(
            "built certificate fails verification: {:?}",
            report.failures()
        )));
    }
    if let Some(path) = dot {
        fs::write(path, to_dot_with(&square(&cert.base), &[], cert.edges()))?;
    }
    write_output(io.output.as_deref(), format!("{}\n", cert.to_json()).as_bytes())?;
    Ok(Outcome::Ok)
}

/// Per-tree results of the three-way check.
struct Row {
    n: usize,
    decided: bool,
    built: bool,
    search: Option<bool>,
    obstruction_free: Option<bool>,
}

impl Row {
    fn agrees(&self) -> bool {
        self.search == Some(self.decided)
            && (!self.decided || self.built)
            && self.obstruction_free.map_or(true, |o| o == self.decided)
    }
}

fn check_tree(t: &Tree, k: usize, budget: SearchBudget) -> Result<Row> {
    let verdict = decide_tree_trestle(t, k)?;
    let built = match &verdict {
        TreeVerdict::Feasible(a) => {
            let cert = build_tree_trestle(t, k, a)?.with_expected_degrees(degree_formula(t, a));
            verify_trestle(&cert).passed()
        }
        TreeVerdict::Infeasible { .. } => false,
    };
    let search = match brute_force_square_trestle(t.graph(), k, budget)? {
        SearchOutcome::Found(_) => Some(true),
        SearchOutcome::NoneExists => Some(false),
        SearchOutcome::Exhausted => None,
    };
    let obstruction_free = if k == 3 {
        let w = check_obstruction(t)?;
        if let Some(w) = &w {
            if !w.violations(t).is_empty() {
                return Err(Error::Invariant(format!(
                    "witness for {} is unsound: {:?}",
                    to_graph6(t.graph()),
                    w.violations(t)
                )));
            }
        }
        Some(w.is_none())
    } else {
        None
    };
    Ok(Row {
        n: t.n(),
        decided: verdict.is_feasible(),
        built,
        search,
        obstruction_free,
    })
}

fn validate(max_n: usize, k: usize, jobs: usize, search: &Search, output: Option<&Path>) -> Result<Outcome> {
    if max_n < 3 {
        return Err(Error::Domain(format!("--max-n must be at least 3, got {max_n}")));
    }
    let trees: Vec<Tree> = (3..=max_n).flat_map(|n| enumerate_trees(n).expect("n >= 3")).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start workers: {e}")))?;
    let budget = budget(search);
    let rows: Vec<Row> = pool.install(|| {
        trees
            .par_iter()
            .map(|t| check_tree(t, k, budget))
            .collect::<Result<Vec<Row>>>()
    })?;

    let mut text = format!("k={k} max_n={max_n}\n");
    text.push_str("n\ttrees\tfeasible\tinfeasible\texhausted\tagree\n");
    for n in 3..=max_n {
        let level: Vec<&Row> = rows.iter().filter(|r| r.n == n).collect();
        let feasible = level.iter().filter(|r| r.decided).count();
        let exhausted = level.iter().filter(|r| r.search.is_none()).count();
        let agree = level.iter().filter(|r| r.agrees()).count();
        text.push_str(&format!(
            "{n}\t{}\t{feasible}\t{}\t{exhausted}\t{agree}\n",
            level.len(),
            level.len() - feasible
        ));
    }
    let agree = rows.iter().filter(|r| r.agrees()).count();
    let exhausted = rows.iter().any(|r| r.search.is_none());
    text.push_str(&format!("agree: {agree}/{}\n", rows.len()));
    write_output(output, text.as_bytes())?;
    if agree == rows.len() {
        Ok(Outcome::Ok)
    } else if exhausted && rows.iter().all(|r| r.agrees() || r.search.is_none()) {
        Err(Error::Exhausted(
            "exhaustive search ran out of budget on some trees".into(),
        ))
    } else {
        Ok(Outcome::Verdict)
    }
}
