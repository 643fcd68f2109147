//! LexDFS on chordal graphs in O(n + m).
//!
//! On chordal graphs the rooted L-trees of LexBFS and LexDFS coincide, so the
//! L-tree of a LexBFS⁺(ρ) order can be handed to [`ordering`], which returns
//! the LexDFS⁺(ρ) order. Recognition of LexDFS orders and L-trees reduces to
//! the same pipeline.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexOrder};
use crate::lexbfs::{lexbfs_plus_observed, LexBfsRun};
use crate::ordering::{ordering_observed, OrderingRun};
use crate::trees::{is_dfs_ltree, RootedSpanningTree};

/// Vertices of an induced cycle of length at least four, in cycle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordlessCycle(pub Vec<Vertex>);

impl ChordlessCycle {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn format(&self, graph: &Graph) -> String {
        let tokens: Vec<_> = self.0.iter().map(|&v| graph.token(v)).collect();
        tokens.join(" ")
    }

    /// Re-checks the witness against `graph`.
    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        let c = &self.0;
        let k = c.len();
        if k < 4 {
            return false;
        }
        let mut seen = vec![false; graph.n()];
        for &v in c {
            if v >= graph.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                graph.has_edge(c[i], c[j]) == consecutive
            })
        })
    }
}

impl fmt::Display for ChordlessCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<_> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", ids.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Carries a perfect elimination order.
    Chordal(VertexOrder),
    NotChordal(ChordlessCycle),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }

    pub fn into_result(self) -> Result<VertexOrder> {
        match self {
            Chordality::Chordal(peo) => Ok(peo),
            Chordality::NotChordal(cycle) => Err(Error::NotChordal(cycle)),
        }
    }
}

/// Chordality test: a LexBFS order reversed is a perfect elimination order
/// iff the graph is chordal.
pub fn check_chordal(graph: &Graph) -> Chordality {
    let run = lexbfs_plus_observed(graph, &VertexOrder::ending_with(graph.n(), 0), |_, _| {})
        .expect("the canonical tie-break is a permutation of V");
    classify(graph, &run)
}

pub fn is_chordal(graph: &Graph) -> bool {
    check_chordal(graph).is_chordal()
}

fn classify(graph: &Graph, run: &LexBfsRun) -> Chordality {
    match peo_violation(graph, &run.order, &run.ltree_parent) {
        None => Chordality::Chordal(run.order.reversed()),
        Some((v, p, w)) => Chordality::NotChordal(chordless_cycle(graph, v, p, w)),
    }
}

/// For each vertex `v`, with `p` its rightmost earlier neighbor in `sigma`
/// (its L-tree parent), all other earlier neighbors of `v` must be earlier
/// neighbors of `p`. Returns a failing `(v, p, w)`.
fn peo_violation(
    graph: &Graph,
    sigma: &VertexOrder,
    parent: &[Option<Vertex>],
) -> Option<(Vertex, Vertex, Vertex)> {
    let n = graph.n();
    // group each v under its parent
    let mut head = vec![usize::MAX; n];
    let mut link = vec![usize::MAX; n];
    for v in graph.vertices() {
        if let Some(p) = parent[v] {
            link[v] = head[p];
            head[p] = v;
        }
    }
    let mut mark = vec![usize::MAX; n];
    for p in graph.vertices() {
        if head[p] == usize::MAX {
            continue;
        }
        for &w in graph.neighbors(p) {
            mark[w] = p;
        }
        let mut v = head[p];
        while v != usize::MAX {
            let here = sigma.position(v);
            for &w in graph.neighbors(v) {
                if w != p && mark[w] != p && sigma.position(w) < here {
                    return Some((v, p, w));
                }
            }
            v = link[v];
        }
    }
    None
}

/// `p` and `w` are non-adjacent neighbors of `v`; a shortest `w`–`p` path
/// avoiding the rest of `N[v]` closes an induced cycle through `v`.
fn chordless_cycle(graph: &Graph, v: Vertex, p: Vertex, w: Vertex) -> ChordlessCycle {
    if let Some(cycle) = cycle_through(graph, v, w, p) {
        return cycle;
    }
    // exhaustive fallback over every centre and non-adjacent neighbor pair
    for c in graph.vertices() {
        let nbrs = graph.neighbors(c);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !graph.has_edge(a, b) {
                    if let Some(cycle) = cycle_through(graph, c, a, b) {
                        return cycle;
                    }
                }
            }
        }
    }
    unreachable!("a non-chordal graph has a chordless cycle")
}

fn cycle_through(
    graph: &Graph,
    centre: Vertex,
    from: Vertex,
    to: Vertex,
) -> Option<ChordlessCycle> {
    let n = graph.n();
    let mut blocked = vec![false; n];
    blocked[centre] = true;
    for &x in graph.neighbors(centre) {
        blocked[x] = x != from && x != to;
    }
    let mut pred = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    pred[from] = from;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut cycle = vec![centre];
            let mut x = to;
            let mut path = vec![x];
            while x != from {
                x = pred[x];
                path.push(x);
            }
            path.reverse();
            cycle.extend(path);
            return Some(ChordlessCycle(cycle));
        }
        for &x in graph.neighbors(u) {
            if !blocked[x] && pred[x] == usize::MAX {
                pred[x] = u;
                queue.push_back(x);
            }
        }
    }
    None
}

/// Which `β` the ordering step uses inside [`lexdfs_plus_chordal_run`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum BetaChoice {
    /// Reverse BFS order of the L-tree.
    #[default]
    TreeBfs,
    /// The LexBFS⁺ order reversed.
    ReversedLexBfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordalOptions {
    pub check_chordal: bool,
    pub beta: BetaChoice,
}

impl Default for ChordalOptions {
    fn default() -> Self {
        ChordalOptions {
            check_chordal: true,
            beta: BetaChoice::TreeBfs,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ChordalLexDfsRun {
    /// LexBFS⁺(ρ).
    pub pi: VertexOrder,
    /// L-tree of `pi`.
    pub tree: RootedSpanningTree,
    pub ordering: OrderingRun,
}

impl ChordalLexDfsRun {
    pub fn sigma(&self) -> &VertexOrder {
        &self.ordering.sigma
    }
}

/// LexDFS⁺(`rho`) of a chordal graph, starting at `start` (the last vertex of
/// `rho`).
pub fn lexdfs_plus_chordal(graph: &Graph, start: Vertex, rho: &VertexOrder) -> Result<VertexOrder> {
    lexdfs_plus_chordal_run(graph, start, rho, ChordalOptions::default())
        .map(|run| run.ordering.sigma)
}

pub fn lexdfs_plus_chordal_run(
    graph: &Graph,
    start: Vertex,
    rho: &VertexOrder,
    options: ChordalOptions,
) -> Result<ChordalLexDfsRun> {
    graph.check_vertex(start)?;
    graph.check_order(rho)?;
    if rho.last() != Some(start) {
        return Err(Error::RhoDoesNotEndAtStart(start));
    }
    let bfs = lexbfs_plus_observed(graph, rho, |_, _| {})?;
    if options.check_chordal {
        classify(graph, &bfs).into_result()?;
    }
    let LexBfsRun {
        order: pi,
        ltree_parent,
        ..
    } = bfs;
    let tree = RootedSpanningTree::from_parents_unchecked(start, ltree_parent);
    let beta = match options.beta {
        BetaChoice::TreeBfs => None,
        BetaChoice::ReversedLexBfs => Some(pi.reversed()),
    };
    let ordering = ordering_observed(graph, &tree, start, rho, beta.as_ref(), |_, _| {})?;
    Ok(ChordalLexDfsRun { pi, tree, ordering })
}

/// A LexDFS order from `start`, ties broken by the identity order with
/// `start` last.
pub fn lexdfs_chordal(graph: &Graph, start: Vertex) -> Result<VertexOrder> {
    graph.check_vertex(start)?;
    lexdfs_plus_chordal(graph, start, &VertexOrder::ending_with(graph.n(), start))
}

fn unchecked() -> ChordalOptions {
    ChordalOptions {
        check_chordal: false,
        ..ChordalOptions::default()
    }
}

fn is_fixed_point(graph: &Graph, order: &VertexOrder) -> Result<bool> {
    let start = order.first().ok_or(Error::EmptyInput)?;
    let run = lexdfs_plus_chordal_run(graph, start, &order.reversed(), unchecked())?;
    Ok(run.ordering.sigma == *order)
}

/// True iff `order` is a LexDFS order of the chordal `graph`, decided by
/// recomputing LexDFS⁺ of the reversed order.
pub fn verify_lexdfs_order(graph: &Graph, order: &VertexOrder) -> Result<bool> {
    graph.check_order(order)?;
    check_chordal(graph).into_result()?;
    is_fixed_point(graph, order)
}

/// True iff `tree` is an L-tree of LexDFS on the chordal `graph`, rooted at
/// the tree's root.
pub fn verify_lexdfs_ltree(graph: &Graph, tree: &RootedSpanningTree) -> Result<bool> {
    tree.check_spans(graph)?;
    check_chordal(graph).into_result()?;
    if !is_dfs_ltree(graph, tree)? {
        return Ok(false);
    }
    let root = tree.root();
    let rho = VertexOrder::ending_with(graph.n(), root);
    let sigma = ordering_observed(graph, tree, root, &rho, None, |_, _| {})?.sigma;
    is_fixed_point(graph, &sigma)
}
