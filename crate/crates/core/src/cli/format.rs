//! Edge-list text format.
//!
//! ```text
//! # comment lines may appear anywhere
//! n m
//! u v        (m lines, u < v, lexicographic)
//! ```
//!
//! The text must end with a newline. Reading accepts edges in any order and
//! orientation; writing always emits the canonical form.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::reduction::SplitInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `n m`")]
    Header { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: expected an edge `u v`")]
    Edge { line: usize },
    #[error("line {line}: vertex {vertex} is out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("input does not end with a newline")]
    FinalNewline,
}

fn numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(ParseError::FinalNewline);
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = numbers(header).ok_or(ParseError::Header { line })?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = numbers(l).ok_or(ParseError::Edge { line })?;
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
            return Err(ParseError::OutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let (u, v) = (u.min(v), u.max(v));
        if !seen.insert((u, v)) {
            return Err(ParseError::Duplicate { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges).expect("edges were checked line by line"))
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// The split graph in the edge-list format, followed by a comment block with
/// the targets and the edge each independent-side vertex encodes.
pub fn format_split_instance(inst: &SplitInstance) -> String {
    let mut out = format_graph(&inst.h);
    let _ = writeln!(out, "#split-instance: s={} b={} w={} n={}", inst.s, inst.target_b, inst.target_w, inst.source_n);
    for (&id, &(u, v)) in inst.independent_side.iter().zip(&inst.edge_of) {
        let _ = writeln!(out, "#edge-vertex: {id} {u} {v}");
    }
    out
}
