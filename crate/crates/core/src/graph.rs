//! Simple undirected connected graphs in compressed sparse form, vertex orders,
//! and the plain traversals (DFS⁺, BFS) the other modules build on.

use std::borrow::Cow;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// Immutable simple, undirected, connected graph.
///
/// Adjacency lists keep the order in which edges were supplied, with
/// duplicates dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    names: Option<Vec<String>>,
    index: Option<HashMap<String, Vertex>>,
}

impl Graph {
    /// Builds an unnamed graph on `0..n`. Tokens default to the decimal id.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        for &(u, v) in edges {
            for endpoint in [u, v] {
                if endpoint >= n {
                    return Err(Error::VertexOutOfRange { endpoint, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
        }
        let (offsets, targets) = compress(n, edges);
        let graph = Graph {
            offsets,
            targets,
            names: None,
            index: None,
        };
        graph.ensure_connected()?;
        Ok(graph)
    }

    fn ensure_connected(&self) -> Result<()> {
        let reached = bfs_reach(self, 0);
        match reached.iter().position(|&r| !r) {
            None => Ok(()),
            Some(v) => Err(Error::Disconnected(
                self.token(0).into_owned(),
                self.token(v).into_owned(),
            )),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n()
    }

    /// O(min(deg u, deg v)).
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).contains(&b)
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    /// External token of `v`.
    pub fn token(&self, v: Vertex) -> Cow<'_, str> {
        match &self.names {
            Some(names) => Cow::Borrowed(names[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    /// Vertex carrying `token`.
    pub fn vertex(&self, token: &str) -> Option<Vertex> {
        match &self.index {
            Some(index) => index.get(token).copied(),
            None => token.parse::<Vertex>().ok().filter(|&v| v < self.n()),
        }
    }

    pub fn is_named(&self) -> bool {
        self.names.is_some()
    }

    /// Space-separated tokens of `order`.
    pub fn format_order(&self, order: &VertexOrder) -> String {
        let tokens: Vec<_> = order.iter().map(|v| self.token(v)).collect();
        tokens.join(" ")
    }

    /// Parses whitespace-separated tokens into an order of this graph's vertices.
    pub fn order_from_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<VertexOrder> {
        let seq = tokens
            .iter()
            .map(|t| {
                self.vertex(t.as_ref())
                    .ok_or_else(|| Error::UnknownToken(t.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if seq.len() != self.n() {
            return Err(Error::OrderLengthMismatch {
                expected: self.n(),
                found: seq.len(),
            });
        }
        VertexOrder::new(seq)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::StartNotInGraph(v))
        }
    }

    pub(crate) fn check_order(&self, order: &VertexOrder) -> Result<()> {
        if order.len() == self.n() {
            Ok(())
        } else {
            Err(Error::OrderLengthMismatch {
                expected: self.n(),
                found: order.len(),
            })
        }
    }
}

/// Two-pass CSR construction keeping input order, then in-place dedup.
fn compress(n: usize, edges: &[(Vertex, Vertex)]) -> (Vec<usize>, Vec<Vertex>) {
    let mut degree = vec![0usize; n + 1];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + degree[v];
    }
    let mut fill = offsets.clone();
    let mut targets = vec![0; offsets[n]];
    for &(u, v) in edges {
        targets[fill[u]] = v;
        fill[u] += 1;
        targets[fill[v]] = u;
        fill[v] += 1;
    }

    let mut stamp = vec![usize::MAX; n];
    let mut out = 0;
    let mut new_offsets = vec![0usize; n + 1];
    for u in 0..n {
        for i in offsets[u]..offsets[u + 1] {
            let w = targets[i];
            if stamp[w] != u {
                stamp[w] = u;
                targets[out] = w;
                out += 1;
            }
        }
        new_offsets[u + 1] = out;
    }
    targets.truncate(out);
    (new_offsets, targets)
}

fn bfs_reach(graph: &Graph, start: Vertex) -> Vec<bool> {
    let mut seen = vec![false; graph.n()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &w in graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Collects tokens and edges, assigning ids by first occurrence.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    ids: HashMap<String, Vertex>,
    names: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex, returning its id.
    pub fn add_vertex(&mut self, token: &str) -> Vertex {
        if let Some(&v) = self.ids.get(token) {
            return v;
        }
        let v = self.names.len();
        self.names.push(token.to_string());
        self.ids.insert(token.to_string(), v);
        v
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        self.edges.push((u, v));
        Ok(())
    }

    pub fn build(self) -> Result<Graph> {
        let n = self.names.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let (offsets, targets) = compress(n, &self.edges);
        let graph = Graph {
            offsets,
            targets,
            names: Some(self.names),
            index: Some(self.ids),
        };
        graph.ensure_connected()?;
        Ok(graph)
    }
}

/// Builds a named graph from token pairs.
pub fn build_graph<A: AsRef<str>, B: AsRef<str>>(edges: &[(A, B)]) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for (a, b) in edges {
        builder.add_edge(a.as_ref(), b.as_ref())?;
    }
    builder.build()
}

/// A linear order of `0..n` with constant-time position lookup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOrder {
    seq: Vec<Vertex>,
    pos: Vec<usize>,
}

impl VertexOrder {
    /// Fails unless `seq` is a permutation of `0..seq.len()`.
    pub fn new(seq: Vec<Vertex>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::NotAPermutation(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::NotAPermutation(format!("vertex {v} repeated")));
            }
            pos[v] = i;
        }
        Ok(VertexOrder { seq, pos })
    }

    pub(crate) fn from_permutation(seq: Vec<Vertex>) -> Self {
        let mut pos = vec![0; seq.len()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        VertexOrder { seq, pos }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation((0..n).collect())
    }

    /// Identity order with `last` moved to the end.
    pub fn ending_with(n: usize, last: Vertex) -> Self {
        let mut seq: Vec<_> = (0..n).filter(|&v| v != last).collect();
        seq.push(last);
        Self::from_permutation(seq)
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    #[inline]
    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn at(&self, i: usize) -> Vertex {
        self.seq[i]
    }

    pub fn first(&self) -> Option<Vertex> {
        self.seq.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.seq.last().copied()
    }

    /// `a` strictly left of `b`.
    #[inline]
    pub fn precedes(&self, a: Vertex, b: Vertex) -> bool {
        self.pos[a] < self.pos[b]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.seq.iter().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    pub fn reversed(&self) -> VertexOrder {
        let n = self.len();
        let seq: Vec<_> = self.seq.iter().rev().copied().collect();
        let pos = self.pos.iter().map(|&p| n - 1 - p).collect();
        VertexOrder { seq, pos }
    }
}

impl fmt::Debug for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.seq).finish()
    }
}

/// Adjacency lists re-sorted so that each list follows `rank` (the order in
/// which vertices appear in the given sequence). Counting sort, O(n + m).
pub(crate) struct RankedAdjacency {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl RankedAdjacency {
    pub(crate) fn new(graph: &Graph, rank: impl Iterator<Item = Vertex>) -> Self {
        let n = graph.n();
        let offsets = graph.offsets.clone();
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; graph.targets.len()];
        for u in rank {
            for &w in graph.neighbors(u) {
                targets[fill[w]] = u;
                fill[w] += 1;
            }
        }
        RankedAdjacency { offsets, targets }
    }

    #[inline]
    pub(crate) fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// DFS⁺: from the deepest stack vertex with an unvisited neighbor, the
/// neighbor rightmost in `tiebreak` is visited next.
pub fn dfs_plus(graph: &Graph, start: Vertex, tiebreak: &VertexOrder) -> Result<VertexOrder> {
    graph.check_vertex(start)?;
    graph.check_order(tiebreak)?;
    let adj = RankedAdjacency::new(graph, tiebreak.iter().rev());
    let n = graph.n();
    let mut visited = vec![false; n];
    let mut cursor = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![start];
    visited[start] = true;
    order.push(start);
    while let Some(&top) = stack.last() {
        let nbrs = adj.neighbors(top);
        let mut c = cursor[top];
        while c < nbrs.len() && visited[nbrs[c]] {
            c += 1;
        }
        cursor[top] = c;
        if c == nbrs.len() {
            stack.pop();
        } else {
            let next = nbrs[c];
            visited[next] = true;
            order.push(next);
            stack.push(next);
        }
    }
    Ok(VertexOrder::from_permutation(order))
}

/// Queue-discipline BFS, neighbors taken in adjacency order.
pub fn bfs_order(graph: &Graph, start: Vertex) -> Result<VertexOrder> {
    graph.check_vertex(start)?;
    let mut seen = vec![false; graph.n()];
    let mut order = Vec::with_capacity(graph.n());
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(VertexOrder::from_permutation(order))
}
