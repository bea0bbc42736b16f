//! Text inputs: newline-delimited graph6 records and `u v` edge lists.

use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// A graph together with the 1-based line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub graph: Graph,
}

/// One graph per nonblank line. Lines starting with `#` are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let graph = parse_graph6(line.as_bytes())
            .map_err(|source| Error::Graph6Line { line: idx + 1, source })?;
        out.push(Record { line: idx + 1, graph });
    }
    Ok(out)
}

/// A single graph as `u v` lines, 0-indexed. An optional first data line
/// holding one integer fixes the order (needed for trailing isolated
/// vertices); otherwise the order is one more than the largest label.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::EdgeList { line: idx + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| err(format!("`{s}` is not a vertex label")))
        };
        match fields.as_slice() {
            [n] if !seen_data => order = Some(num(n)?),
            [u, v] => edges.push((num(u)?, num(v)?, idx + 1)),
            _ => return Err(err(format!("expected `u v`, found `{line}`"))),
        }
        seen_data = true;
    }
    let max_label = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let n = order.unwrap_or(max_label.max(1));
    let mut g = Graph::empty(n)?;
    for (u, v, line) in edges {
        g.add_edge(u, v).map_err(|e| Error::EdgeList { line, message: e.to_string() })?;
    }
    Ok(g)
}

/// Edge lists start with a digit; graph6 bytes never do.
pub fn parse_graphs(text: &str) -> Result<Vec<Record>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => {
            let line = text.lines().position(|x| x.trim() == l).unwrap_or(0) + 1;
            Ok(vec![Record { line, graph: parse_edge_list(text)? }])
        }
        _ => parse_graph6_lines(text),
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
    Ok(s)
}
