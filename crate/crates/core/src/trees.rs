//! Rooted spanning trees of search orders: F-tree and L-tree construction,
//! DFS L-tree recognition via the ancestor property, and tree-restricted DFS⁺.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexOrder};

/// Rooted spanning tree stored as a parent array.
///
/// Children lists are kept in increasing vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedSpanningTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    child_offsets: Vec<usize>,
    children: Vec<Vertex>,
}

impl RootedSpanningTree {
    /// Validates that `parent` describes a single tree rooted at `root`
    /// spanning all `parent.len()` vertices.
    pub fn new(root: Vertex, parent: Vec<Option<Vertex>>) -> Result<Self> {
        let n = parent.len();
        if root >= n {
            return Err(Error::NotASpanningTree(format!("root {root} out of range")));
        }
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None if v != root => {
                    return Err(Error::NotASpanningTree(format!("vertex {v} has no parent")))
                }
                Some(_) if v == root => {
                    return Err(Error::NotASpanningTree(format!("root {root} has a parent")))
                }
                Some(p) if p >= n => {
                    return Err(Error::NotASpanningTree(format!("parent {p} out of range")))
                }
                _ => {}
            }
        }
        let tree = Self::from_parents_unchecked(root, parent);
        // n - 1 parent links and every vertex reachable from the root ⇒ acyclic
        let reached = tree.bfs_order_unchecked().len();
        if reached != n {
            return Err(Error::NotASpanningTree(format!(
                "only {reached} of {n} vertices hang below the root (cycle in parent links)"
            )));
        }
        Ok(tree)
    }

    /// `parent` must already describe a tree rooted at `root`, for example
    /// parents taken from a search order.
    pub(crate) fn from_parents_unchecked(root: Vertex, parent: Vec<Option<Vertex>>) -> Self {
        let n = parent.len();
        let mut degree = vec![0usize; n + 1];
        for p in parent.iter().flatten() {
            degree[*p] += 1;
        }
        let mut child_offsets = vec![0usize; n + 1];
        for v in 0..n {
            child_offsets[v + 1] = child_offsets[v] + degree[v];
        }
        let mut fill = child_offsets.clone();
        let mut children = vec![0; n.saturating_sub(1)];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[fill[p]] = v;
                fill[p] += 1;
            }
        }
        RootedSpanningTree {
            root,
            parent,
            child_offsets,
            children,
        }
    }

    /// Builds from `(child, parent)` pairs; vertices not mentioned as a child
    /// must be the root.
    pub fn from_pairs(n: usize, root: Vertex, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut parent = vec![None; n];
        for &(c, p) in pairs {
            if c >= n || p >= n {
                return Err(Error::NotASpanningTree(format!(
                    "edge ({c}, {p}) out of range"
                )));
            }
            if parent[c].replace(p).is_some() {
                return Err(Error::NotASpanningTree(format!(
                    "vertex {c} has two parents"
                )));
            }
        }
        Self::new(root, parent)
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<Vertex>] {
        &self.parent
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[self.child_offsets[v]..self.child_offsets[v + 1]]
    }

    /// Tree edges as `(child, parent)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p)))
    }

    fn bfs_order_unchecked(&self) -> Vec<Vertex> {
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            // a parent cycle can't be reached from the root, so this terminates
            queue.extend(self.children(u));
        }
        order
    }

    /// BFS order of the tree from its root, children in id order.
    pub fn bfs_order(&self) -> VertexOrder {
        VertexOrder::from_permutation(self.bfs_order_unchecked())
    }

    /// Checks that the tree spans `graph` and uses only its edges.
    pub fn check_spans(&self, graph: &Graph) -> Result<()> {
        if self.n() != graph.n() {
            return Err(Error::NotASpanningTree(format!(
                "tree has {} vertices, graph has {}",
                self.n(),
                graph.n()
            )));
        }
        let mut mark = vec![usize::MAX; graph.n()];
        for v in graph.vertices() {
            for &w in graph.neighbors(v) {
                mark[w] = v;
            }
            if let Some(p) = self.parent[v] {
                if mark[p] != v {
                    return Err(Error::NotASpanningTree(format!(
                        "tree edge ({}, {}) is not a graph edge",
                        graph.token(v),
                        graph.token(p)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same root and same edge set.
    pub fn same_as(&self, other: &RootedSpanningTree) -> bool {
        self.root == other.root && self.parent == other.parent
    }
}

/// Entry/exit times of one Euler tour over a rooted tree.
#[derive(Debug, Clone)]
pub struct AncestorIndex {
    entry: Vec<u32>,
    exit: Vec<u32>,
}

impl AncestorIndex {
    pub fn new(tree: &RootedSpanningTree) -> Self {
        let n = tree.n();
        let mut entry = vec![0u32; n];
        let mut exit = vec![0u32; n];
        let mut clock = 0u32;
        let mut stack = vec![(tree.root(), 0usize)];
        entry[tree.root()] = clock;
        while let Some((v, i)) = stack.pop() {
            let kids = tree.children(v);
            if i < kids.len() {
                stack.push((v, i + 1));
                clock += 1;
                entry[kids[i]] = clock;
                stack.push((kids[i], 0));
            } else {
                clock += 1;
                exit[v] = clock;
            }
        }
        AncestorIndex { entry, exit }
    }

    /// `u` is `v` or an ancestor of `v`.
    #[inline]
    pub fn is_ancestor(&self, u: Vertex, v: Vertex) -> bool {
        self.entry[u] <= self.entry[v] && self.exit[v] <= self.exit[u]
    }

    #[inline]
    pub fn comparable(&self, u: Vertex, v: Vertex) -> bool {
        self.is_ancestor(u, v) || self.is_ancestor(v, u)
    }
}

fn search_tree(
    graph: &Graph,
    order: &VertexOrder,
    pick: impl Fn(usize, usize) -> bool,
) -> Result<RootedSpanningTree> {
    graph.check_order(order)?;
    let root = order.first().ok_or(Error::EmptyInput)?;
    let mut parent = vec![None; graph.n()];
    for v in order.iter().skip(1) {
        let here = order.position(v);
        let mut best: Option<Vertex> = None;
        for &w in graph.neighbors(v) {
            if order.position(w) < here
                && best.is_none_or(|b| pick(order.position(w), order.position(b)))
            {
                best = Some(w);
            }
        }
        match best {
            Some(p) => parent[v] = Some(p),
            None => return Err(Error::NotASearchOrder(v)),
        }
    }
    // parents precede their children in `order`, so this is a tree
    Ok(RootedSpanningTree::from_parents_unchecked(root, parent))
}

/// L-tree: each vertex hangs from its rightmost earlier neighbor.
pub fn l_tree(graph: &Graph, order: &VertexOrder) -> Result<RootedSpanningTree> {
    search_tree(graph, order, |candidate, best| candidate > best)
}

/// F-tree: each vertex hangs from its leftmost neighbor, which must be earlier.
pub fn f_tree(graph: &Graph, order: &VertexOrder) -> Result<RootedSpanningTree> {
    search_tree(graph, order, |candidate, best| candidate < best)
}

/// True iff every graph edge joins an ancestor–descendant pair of `tree`,
/// i.e. `tree` is an L-tree of some DFS of `graph`.
pub fn is_dfs_ltree(graph: &Graph, tree: &RootedSpanningTree) -> Result<bool> {
    tree.check_spans(graph)?;
    let index = AncestorIndex::new(tree);
    Ok(graph.edges().all(|(u, v)| index.comparable(u, v)))
}

/// DFS⁺ over the tree itself: among the unvisited children of the deepest
/// vertex that has one, the child rightmost in `tiebreak` goes next.
pub fn tree_dfs_plus(tree: &RootedSpanningTree, tiebreak: &VertexOrder) -> Result<VertexOrder> {
    let n = tree.n();
    if tiebreak.len() != n {
        return Err(Error::OrderLengthMismatch {
            expected: n,
            found: tiebreak.len(),
        });
    }
    // children bucketed by descending tiebreak position
    let mut fill: Vec<usize> = tree.child_offsets[..n].to_vec();
    let mut sorted = vec![0; tree.children.len()];
    for v in tiebreak.iter().rev() {
        if let Some(p) = tree.parent(v) {
            sorted[fill[p]] = v;
            fill[p] += 1;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![tree.root()];
    while let Some(v) = stack.pop() {
        order.push(v);
        let kids = &sorted[tree.child_offsets[v]..tree.child_offsets[v + 1]];
        stack.extend(kids.iter().rev());
    }
    Ok(VertexOrder::from_permutation(order))
}

/// Same root and same edge set.
pub fn tree_equal(a: &RootedSpanningTree, b: &RootedSpanningTree) -> bool {
    a.same_as(b)
}
