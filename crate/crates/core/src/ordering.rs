//! Turning a DFS L-tree into a search order.
//!
//! The tree is walked from the leaves toward the root (order `β`), refining a
//! partition of `V` by each vertex's neighbors that come earlier in `β`. The
//! resulting classes, sorted by descending `ρ` position with the start vertex
//! pulled to the front and then reversed, give a tie-break `τ`. A DFS⁺(`τ`)
//! over the tree is the output. When the tree is an L-tree of LexDFS the
//! output is a LexDFS order of the graph; otherwise it is still a DFS order
//! whose L-tree is the given tree.

use crate::error::{Error, Result};
use crate::graph::{Graph, RankedAdjacency, Vertex, VertexOrder};
use crate::partition::OrderedPartition;
use crate::trees::{is_dfs_ltree, tree_dfs_plus, RootedSpanningTree};

/// Intermediate products of one [`ordering`] call.
#[derive(Debug, Clone)]
pub struct OrderingRun {
    pub beta: VertexOrder,
    /// Partition after the refinement loop, before the `ρ⁻` sort.
    pub refined: Classes,
    pub tau: VertexOrder,
    pub sigma: VertexOrder,
}

/// An ordered partition stored as one member sequence and class end offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classes {
    members: Vec<Vertex>,
    ends: Vec<usize>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        let starts = std::iter::once(0).chain(self.ends.iter().copied());
        starts.zip(&self.ends).map(|(a, &b)| &self.members[a..b])
    }

    pub fn to_vecs(&self) -> Vec<Vec<Vertex>> {
        self.iter().map(<[Vertex]>::to_vec).collect()
    }
}

/// Checks that every vertex lies left of its tree parent in `beta`, which
/// puts all ancestors to its right.
pub fn check_beta(tree: &RootedSpanningTree, beta: &VertexOrder) -> Result<()> {
    if beta.len() != tree.n() {
        return Err(Error::OrderLengthMismatch {
            expected: tree.n(),
            found: beta.len(),
        });
    }
    for (v, p) in tree.edges() {
        if !beta.precedes(v, p) {
            return Err(Error::InvalidBeta {
                vertex: v,
                ancestor: p,
            });
        }
    }
    Ok(())
}

/// Reverse BFS order of the tree from its root.
pub fn default_beta(tree: &RootedSpanningTree) -> VertexOrder {
    tree.bfs_order().reversed()
}

/// Computes an order starting at `start` whose L-tree is `tree`.
///
/// `tree` must be a DFS L-tree of `graph` rooted at `start` (not verified
/// here; see [`ordering_checked`]). `rho` must end with `start`.
/// `beta_override` replaces the reverse-BFS `β` and must place every vertex
/// left of its ancestors.
pub fn ordering(
    graph: &Graph,
    tree: &RootedSpanningTree,
    start: Vertex,
    rho: &VertexOrder,
    beta_override: Option<&VertexOrder>,
) -> Result<VertexOrder> {
    ordering_observed(graph, tree, start, rho, beta_override, |_, _| {}).map(|run| run.sigma)
}

/// As [`ordering`], first rejecting trees that are not DFS L-trees.
pub fn ordering_checked(
    graph: &Graph,
    tree: &RootedSpanningTree,
    start: Vertex,
    rho: &VertexOrder,
    beta_override: Option<&VertexOrder>,
) -> Result<VertexOrder> {
    if !is_dfs_ltree(graph, tree)? {
        return Err(Error::NotDfsLtree);
    }
    ordering(graph, tree, start, rho, beta_override)
}

/// Full run, calling `observe(v, partition)` after the refinement for each
/// vertex `v` of `β`.
pub fn ordering_observed<F>(
    graph: &Graph,
    tree: &RootedSpanningTree,
    start: Vertex,
    rho: &VertexOrder,
    beta_override: Option<&VertexOrder>,
    mut observe: F,
) -> Result<OrderingRun>
where
    F: FnMut(Vertex, &OrderedPartition),
{
    let n = graph.n();
    graph.check_vertex(start)?;
    graph.check_order(rho)?;
    if tree.n() != n {
        return Err(Error::NotASpanningTree(format!(
            "tree has {} vertices, graph has {n}",
            tree.n()
        )));
    }
    if tree.root() != start {
        return Err(Error::RootMismatch {
            root: tree.root(),
            start,
        });
    }
    if rho.last() != Some(start) {
        return Err(Error::RhoDoesNotEndAtStart(start));
    }
    let beta = match beta_override {
        Some(beta) => {
            check_beta(tree, beta)?;
            beta.clone()
        }
        None => default_beta(tree),
    };

    // neighbor lists ascending in β, so left neighbors form a prefix
    let adj = RankedAdjacency::new(graph, beta.iter());
    let mut q = OrderedPartition::new(n, beta.as_slice())?;
    for (i, v) in beta.iter().enumerate() {
        let nbrs = adj.neighbors(v);
        let left = nbrs.partition_point(|&w| beta.position(w) < i);
        q.refine_trusted(&nbrs[..left]);
        observe(v, &q);
    }
    let (members, ends) = q.flatten();
    let refined = Classes { members, ends };

    for v in rho.iter().rev() {
        q.move_to_back(v)?;
    }
    q.isolate_front(start)?;
    let mut tau_seq = q.sequence();
    tau_seq.reverse();
    let tau = VertexOrder::from_permutation(tau_seq);
    let sigma = tree_dfs_plus(tree, &tau)?;
    Ok(OrderingRun {
        beta,
        refined,
        tau,
        sigma,
    })
}
