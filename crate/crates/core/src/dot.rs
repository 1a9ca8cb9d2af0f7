//! Minimal reader for undirected DOT graphs.
//!
//! Understands `graph`/`strict graph` bodies made of node statements and
//! `--` edge chains, with attribute lists ignored. Enough for feeding hand
//! written test graphs to the planarity engine.

use std::collections::HashMap;

use thiserror::Error;

use crate::planarity::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("expected `graph {{ … }}`")]
    Header,
    #[error("directed edges are not supported (statement {0})")]
    Directed(usize),
    #[error("empty node name in statement {0}")]
    EmptyName(usize),
}

/// A parsed DOT graph with its node names in first-appearance order.
#[derive(Debug, Clone)]
pub struct DotGraph {
    pub names: Vec<String>,
    pub graph: SimpleGraph,
}

fn strip_attributes(stmt: &str) -> String {
    let mut out = String::new();
    let mut depth = 0usize;
    for c in stmt.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out
}

pub fn parse_dot(text: &str) -> Result<DotGraph, DotError> {
    let without_comments: String =
        text.lines().map(|l| l.split("//").next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let open = without_comments.find('{').ok_or(DotError::Header)?;
    let close = without_comments.rfind('}').ok_or(DotError::Header)?;
    let header = without_comments[..open].trim();
    let keyword = header.split_whitespace().find(|w| *w != "strict").ok_or(DotError::Header)?;
    if keyword != "graph" || close < open {
        return Err(DotError::Header);
    }
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names = Vec::new();
    let mut edges = Vec::new();
    let body = strip_attributes(&without_comments[open + 1..close]);
    for (k, stmt) in body.split([';', '\n']).enumerate() {
        let stmt = stmt.trim();
        if stmt.is_empty() || stmt.contains('=') || ["node", "edge", "graph"].contains(&stmt) {
            continue;
        }
        if stmt.contains("->") {
            return Err(DotError::Directed(k));
        }
        let mut ids = Vec::new();
        for part in stmt.split("--") {
            let name = part.trim().trim_matches('"');
            if name.is_empty() {
                return Err(DotError::EmptyName(k));
            }
            let next = names.len();
            let id = *index.entry(name.to_owned()).or_insert(next);
            if id == next {
                names.push(name.to_owned());
            }
            ids.push(id);
        }
        edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
    }
    let graph = SimpleGraph::from_edges(names.len(), edges);
    Ok(DotGraph { names, graph })
}
