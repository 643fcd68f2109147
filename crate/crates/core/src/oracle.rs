//! Slow, literal reference implementations.
//!
//! Labels are explicit integer sequences and every step rescans all unvisited
//! vertices. The four-point checkers test the triple characterizations of
//! DFS and LexDFS orders directly. Nothing here is meant for large inputs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexOrder};

/// Default vertex bound for the enumerators.
pub const ENUMERATION_LIMIT: usize = 10;

/// How visited vertices extend the labels of their unvisited neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelRule {
    /// Visit number `i` is prepended; the start label is `(0)`.
    LexDfs,
    /// `n - i` is appended; the start label is `(n)`.
    LexBfs,
}

/// Labels of a literal LexDFS/LexBFS run.
#[derive(Debug, Clone)]
pub struct LabelState {
    rule: LabelRule,
    labels: Vec<Vec<usize>>,
    visited: Vec<bool>,
    step: usize,
}

impl LabelState {
    pub fn new(graph: &Graph, rule: LabelRule, start: Vertex) -> Self {
        let n = graph.n();
        let mut labels = vec![Vec::new(); n];
        labels[start] = vec![match rule {
            LabelRule::LexDfs => 0,
            LabelRule::LexBfs => n,
        }];
        LabelState {
            rule,
            labels,
            visited: vec![false; n],
            step: 0,
        }
    }

    pub fn label(&self, v: Vertex) -> &[usize] {
        &self.labels[v]
    }

    pub fn is_done(&self) -> bool {
        self.step == self.visited.len()
    }

    /// Unvisited vertices whose label is lexicographically largest.
    pub fn candidates(&self) -> Vec<Vertex> {
        let mut best: Vec<Vertex> = Vec::new();
        for v in 0..self.visited.len() {
            if self.visited[v] {
                continue;
            }
            match best.first() {
                None => best.push(v),
                Some(&b) => match self.labels[v].cmp(&self.labels[b]) {
                    std::cmp::Ordering::Greater => {
                        best.clear();
                        best.push(v);
                    }
                    std::cmp::Ordering::Equal => best.push(v),
                    std::cmp::Ordering::Less => {}
                },
            }
        }
        best
    }

    /// Numbers `v` and updates the labels of its unvisited neighbors.
    pub fn visit(&mut self, graph: &Graph, v: Vertex) {
        debug_assert!(!self.visited[v]);
        self.step += 1;
        self.visited[v] = true;
        let n = self.visited.len();
        for &w in graph.neighbors(v) {
            if self.visited[w] {
                continue;
            }
            match self.rule {
                LabelRule::LexDfs => self.labels[w].insert(0, self.step),
                LabelRule::LexBfs => self.labels[w].push(n - self.step),
            }
        }
    }
}

fn naive_plus(graph: &Graph, tiebreak: &VertexOrder, rule: LabelRule) -> Result<VertexOrder> {
    graph.check_order(tiebreak)?;
    let start = tiebreak.last().ok_or(Error::EmptyInput)?;
    let mut state = LabelState::new(graph, rule, start);
    let mut order = Vec::with_capacity(graph.n());
    while !state.is_done() {
        let v = state
            .candidates()
            .into_iter()
            .max_by_key(|&v| tiebreak.position(v))
            .expect("an unvisited vertex remains");
        state.visit(graph, v);
        order.push(v);
    }
    VertexOrder::new(order)
}

/// LexDFS⁺(`tiebreak`) by direct label simulation, starting at the last
/// vertex of `tiebreak`.
pub fn naive_lexdfs_plus(graph: &Graph, tiebreak: &VertexOrder) -> Result<VertexOrder> {
    naive_plus(graph, tiebreak, LabelRule::LexDfs)
}

/// LexBFS⁺(`tiebreak`) by direct label simulation.
pub fn naive_lexbfs_plus(graph: &Graph, tiebreak: &VertexOrder) -> Result<VertexOrder> {
    naive_plus(graph, tiebreak, LabelRule::LexBfs)
}

struct Adjacency {
    n: usize,
    bits: Vec<bool>,
}

impl Adjacency {
    fn new(graph: &Graph) -> Self {
        let n = graph.n();
        let mut bits = vec![false; n * n];
        for (u, v) in graph.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        Adjacency { n, bits }
    }

    #[inline]
    fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.n + v]
    }
}

/// DFS four-point condition: for `a ≺ b ≺ c` with `ac ∈ E`, `ab ∉ E` there
/// is `a ≺ d ≺ b` with `db ∈ E`.
pub fn check_dfs_order(graph: &Graph, order: &VertexOrder) -> bool {
    if order.len() != graph.n() {
        return false;
    }
    let adj = Adjacency::new(graph);
    let at = |i| order.at(i);
    let n = order.len();
    for pa in 0..n {
        for pb in pa + 1..n {
            let (a, b) = (at(pa), at(pb));
            if adj.has(a, b) || (pa + 1..pb).any(|pd| adj.has(at(pd), b)) {
                continue;
            }
            if (pb + 1..n).any(|pc| adj.has(a, at(pc))) {
                return false;
            }
        }
    }
    true
}

/// LexDFS four-point condition: as [`check_dfs_order`] with the witness `d`
/// also required to be non-adjacent to `c`.
pub fn check_lexdfs_order(graph: &Graph, order: &VertexOrder) -> bool {
    if order.len() != graph.n() {
        return false;
    }
    let adj = Adjacency::new(graph);
    let at = |i| order.at(i);
    let n = order.len();
    for pa in 0..n {
        for pb in pa + 1..n {
            let (a, b) = (at(pa), at(pb));
            if adj.has(a, b) {
                continue;
            }
            for pc in pb + 1..n {
                let c = at(pc);
                if !adj.has(a, c) {
                    continue;
                }
                let witnessed = (pa + 1..pb).any(|pd| {
                    let d = at(pd);
                    adj.has(d, b) && !adj.has(d, c)
                });
                if !witnessed {
                    return false;
                }
            }
        }
    }
    true
}

fn enumerate(
    graph: &Graph,
    start: Vertex,
    rule: LabelRule,
    limit: usize,
) -> Result<Vec<VertexOrder>> {
    graph.check_vertex(start)?;
    if graph.n() > limit {
        return Err(Error::GraphTooLarge {
            n: graph.n(),
            limit,
        });
    }
    fn branch(
        graph: &Graph,
        state: &LabelState,
        prefix: &mut Vec<Vertex>,
        out: &mut BTreeSet<Vec<Vertex>>,
    ) {
        if state.is_done() {
            out.insert(prefix.clone());
            return;
        }
        for v in state.candidates() {
            let mut next = state.clone();
            next.visit(graph, v);
            prefix.push(v);
            branch(graph, &next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeSet::new();
    branch(
        graph,
        &LabelState::new(graph, rule, start),
        &mut Vec::new(),
        &mut out,
    );
    out.into_iter().map(VertexOrder::new).collect()
}

/// Every LexDFS order of `graph` starting at `start`, sorted.
pub fn enumerate_lexdfs_orders(
    graph: &Graph,
    start: Vertex,
    limit: usize,
) -> Result<Vec<VertexOrder>> {
    enumerate(graph, start, LabelRule::LexDfs, limit)
}

/// Every LexBFS order of `graph` starting at `start`, sorted.
pub fn enumerate_lexbfs_orders(
    graph: &Graph,
    start: Vertex,
    limit: usize,
) -> Result<Vec<VertexOrder>> {
    enumerate(graph, start, LabelRule::LexBfs, limit)
}

/// Orders obtained by swapping two adjacent entries of `order` whose LexDFS
/// verdict under [`check_lexdfs_order`] differs from that of `order`.
pub fn verdict_changing_swaps(graph: &Graph, order: &VertexOrder) -> Vec<VertexOrder> {
    let base = check_lexdfs_order(graph, order);
    let seq = order.as_slice();
    (0..seq.len().saturating_sub(1))
        .filter_map(|i| {
            let mut s = seq.to_vec();
            s.swap(i, i + 1);
            let o = VertexOrder::new(s).expect("swap keeps a permutation");
            (check_lexdfs_order(graph, &o) != base).then_some(o)
        })
        .collect()
}

/// Searches every vertex subset for an induced cycle of length ≥ 4.
/// Exponential; `graph.n()` must be at most 20.
pub fn brute_force_chordless_cycle(graph: &Graph) -> Result<Option<Vec<Vertex>>> {
    const MAX: usize = 20;
    let n = graph.n();
    if n > MAX {
        return Err(Error::GraphTooLarge { n, limit: MAX });
    }
    let adj = Adjacency::new(graph);
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let members: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let two_regular = members
            .iter()
            .all(|&u| members.iter().filter(|&&w| adj.has(u, w)).count() == 2);
        if !two_regular {
            continue;
        }
        // walk the cycle from its first vertex; it must close over all members
        let mut cycle = vec![members[0]];
        let mut prev = usize::MAX;
        let mut cur = members[0];
        loop {
            let next = members
                .iter()
                .copied()
                .find(|&w| adj.has(cur, w) && w != prev)
                .expect("two-regular");
            if next == members[0] {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        if cycle.len() == members.len() {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}
