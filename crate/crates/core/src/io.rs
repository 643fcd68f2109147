//! Text formats.
//!
//! * Edge list: one `u v` pair per line. A line with a single token declares
//!   a vertex without edges (needed for the one-vertex graph). Blank lines and
//!   lines starting with `#` are ignored.
//! * Order: tokens separated by any whitespace.
//! * Tree: a `root r` line, then one `child parent` line per tree edge.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexOrder};
use crate::trees::RootedSpanningTree;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            [v] => {
                builder.add_vertex(v);
            }
            [a, b] => builder.add_edge(a, b)?,
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    builder.build()
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("# n={} m={}\n", graph.n(), graph.m());
    if graph.m() == 0 {
        out.push_str(&graph.token(0));
        out.push('\n');
    }
    for (u, v) in graph.edges() {
        out.push_str(&graph.token(u));
        out.push(' ');
        out.push_str(&graph.token(v));
        out.push('\n');
    }
    out
}

pub fn parse_order(graph: &Graph, text: &str) -> Result<VertexOrder> {
    let tokens: Vec<&str> = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .collect();
    graph.order_from_tokens(&tokens)
}

pub fn write_order(graph: &Graph, order: &VertexOrder) -> String {
    let mut out = graph.format_order(order);
    out.push('\n');
    out
}

pub fn parse_tree(graph: &Graph, text: &str) -> Result<RootedSpanningTree> {
    let lookup = |line: usize, token: &str| {
        graph.vertex(token).ok_or_else(|| Error::Parse {
            line,
            message: format!("unknown vertex `{token}`"),
        })
    };
    let mut root = None;
    let mut pairs = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["root", r] if root.is_none() => root = Some(lookup(line, r)?),
            ["root", _] => {
                return Err(Error::Parse {
                    line,
                    message: "second `root` line".into(),
                })
            }
            [c, p] => pairs.push((lookup(line, c)?, lookup(line, p)?)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: "expected `root r` or `child parent`".into(),
                })
            }
        }
    }
    let root = root.ok_or(Error::Parse {
        line: 0,
        message: "missing `root` line".into(),
    })?;
    RootedSpanningTree::from_pairs(graph.n(), root, &pairs)
}

/// `root r`, then `child parent` lines sorted by child token.
pub fn write_tree(graph: &Graph, tree: &RootedSpanningTree) -> String {
    let mut lines: Vec<(String, String)> = tree
        .edges()
        .map(|(c, p)| (graph.token(c).into_owned(), graph.token(p).into_owned()))
        .collect();
    lines.sort();
    let mut out = format!("root {}\n", graph.token(tree.root()));
    for (c, p) in lines {
        out.push_str(&c);
        out.push(' ');
        out.push_str(&p);
        out.push('\n');
    }
    out
}
