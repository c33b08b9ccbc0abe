//! Text formats: graph6, whitespace edge lists and DOT output.
//!
//! graph6 follows the standard layout: a size prefix of 6-bit groups
//! offset by 63, then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per
//! byte, most significant bit first, zero padded.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            "dot" => Ok(Format::Dot),
            other => Err(Error::domain(format!("unknown format {other:?}"))),
        }
    }
}

pub fn read_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => from_graph6(bytes),
        Format::Edgelist => from_edgelist(bytes),
        Format::Dot => Err(Error::domain("DOT is an output-only format")),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s.into_bytes()
        }
        Format::Edgelist => to_edgelist(g).into_bytes(),
        Format::Dot => to_dot(g, &[]).into_bytes(),
    }
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let data = &bytes[start..end];
    let digit = |i: usize| -> Result<usize> {
        match data.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Error::parse(start + i, format!("invalid graph6 byte 0x{b:02x}"))),
            None => Err(Error::parse(start + i, "truncated graph6 size header")),
        }
    };

    let (n, mut pos) = match data.first() {
        None => return Err(Error::parse(start, "empty graph6 string")),
        Some(126) if data.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | digit(i)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | digit(i)?;
            }
            (n, 4)
        }
        Some(_) => (digit(0)?, 1),
    };

    for i in pos..data.len() {
        digit(i)?;
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    if data.len() - pos != needed {
        return Err(Error::parse(
            start + data.len().min(pos + needed),
            format!(
                "expected {needed} adjacency bytes for n = {n}, found {}",
                data.len() - pos
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    let mut current = 0;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                current = digit(pos)?;
                pos += 1;
            }
            if (current >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && current & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(Error::parse(start + pos - 1, "non-zero graph6 padding bits"));
    }
    Graph::from_edges(n, edges)
}

/// Edge list with an `n=<count>` header line.
pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses whitespace-separated `u v` pairs, one per line. An optional
/// `n=<count>` line fixes the vertex count (otherwise the largest id plus
/// one). Blank lines and `#` comments are ignored.
pub fn from_edgelist(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::parse(e.valid_up_to(), "edge list is not valid UTF-8"))?;
    let mut declared: Option<usize> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = body.len() - body.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix("n=") {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::parse(line_start + lead, "n= header must come first"));
            }
            declared = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::parse(line_start + lead + 2, format!("invalid vertex count {rest:?}")))?,
            );
            continue;
        }
        let mut fields = Vec::with_capacity(2);
        let mut col = 0;
        for tok in body.split_whitespace() {
            let at = body[col..].find(tok).map(|p| p + col).unwrap_or(col);
            col = at + tok.len();
            let v: Vertex = tok
                .parse()
                .map_err(|_| Error::parse(line_start + at, format!("invalid vertex id {tok:?}")))?;
            fields.push(v);
        }
        if fields.len() != 2 {
            return Err(Error::parse(
                line_start + lead,
                format!("expected two vertex ids, found {}", fields.len()),
            ));
        }
        if fields[0] == fields[1] {
            return Err(Error::parse(line_start + lead, "self-loop"));
        }
        edges.push((fields[0], fields[1]));
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < inferred => {
            return Err(Error::parse(
                0,
                format!("declared n={n} but vertex {} appears", inferred - 1),
            ))
        }
        Some(n) => n,
        None => inferred,
    };
    Graph::from_edges(n, edges)
}

/// Undirected DOT; `highlight` vertices are drawn filled.
pub fn to_dot(g: &Graph, highlight: &[Vertex]) -> String {
    to_dot_with(g, highlight, &[])
}

/// DOT with highlighted vertices and bold edges.
pub fn to_dot_with(g: &Graph, highlight: &[Vertex], bold: &[Edge]) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        if highlight.contains(&v) {
            let _ = writeln!(s, "  {v} [style=filled, fillcolor=white, penwidth=2];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if bold.contains(&(u, v)) {
            let _ = writeln!(s, "  {u} -- {v} [penwidth=3];");
        } else {
            let _ = writeln!(s, "  {u} -- {v};");
        }
    }
    s.push_str("}\n");
    s
}
