//! Linear-time LexBFS and LexBFS⁺ by partition refinement.
//!
//! The partition starts as one class sorted by descending tie-break position.
//! Each step takes the front vertex of the first unvisited class as pivot,
//! splits it off, and pulls its unvisited neighbors to the front of their
//! classes. Classes stay sorted by descending tie-break position, so the
//! front of the first class is always the rightmost-in-ρ vertex among those
//! with the largest label.

use crate::error::{Error, Result};
use crate::graph::{Graph, RankedAdjacency, Vertex, VertexOrder};
use crate::partition::OrderedPartition;

/// Output of a LexBFS⁺ run with its refinement work count.
#[derive(Debug, Clone)]
pub struct LexBfsRun {
    pub order: VertexOrder,
    /// Vertex moves performed by refinement; at most `n + m`.
    pub moves: u64,
    /// Parent of each vertex in the L-tree of `order` (its last visited
    /// neighbor before it), recorded during the search.
    pub ltree_parent: Vec<Option<Vertex>>,
}

/// LexBFS⁺(`tiebreak`), starting at the last vertex of `tiebreak`.
pub fn lexbfs_plus(graph: &Graph, tiebreak: &VertexOrder) -> Result<VertexOrder> {
    lexbfs_plus_observed(graph, tiebreak, |_, _| {}).map(|run| run.order)
}

/// As [`lexbfs_plus`], calling `observe(pivot, partition)` after each pivot's
/// refinement.
pub fn lexbfs_plus_observed<F>(
    graph: &Graph,
    tiebreak: &VertexOrder,
    mut observe: F,
) -> Result<LexBfsRun>
where
    F: FnMut(Vertex, &OrderedPartition),
{
    graph.check_order(tiebreak)?;
    let n = graph.n();
    let initial: Vec<Vertex> = tiebreak.iter().rev().collect();
    // neighbor lists in partition order, so pulled groups arrive pre-sorted
    let adj = RankedAdjacency::new(graph, initial.iter().copied());
    let mut partition = OrderedPartition::new(n, &initial)?;
    let mut visited = vec![false; n];
    let mut parent = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut pulled = Vec::new();

    let mut frontier = partition.first_class();
    while let Some(class) = frontier {
        let pivot = partition.front(class);
        partition.refine_trusted(&[pivot]);
        visited[pivot] = true;
        order.push(pivot);

        pulled.clear();
        pulled.extend(adj.neighbors(pivot).iter().filter(|&&w| !visited[w]));
        for &w in &pulled {
            parent[w] = Some(pivot);
        }
        partition.refine_trusted(&pulled);
        observe(pivot, &partition);

        let own = partition
            .class_of(pivot)
            .expect("pivot stays in the ground set");
        frontier = partition.next_class(own);
    }
    debug_assert_eq!(order.len(), n);
    Ok(LexBfsRun {
        order: VertexOrder::from_permutation(order),
        moves: partition.moves(),
        ltree_parent: parent,
    })
}

/// A LexBFS order from `start`, ties broken by the identity order with
/// `start` moved last.
pub fn lexbfs(graph: &Graph, start: Vertex) -> Result<VertexOrder> {
    if !graph.contains(start) {
        return Err(Error::StartNotInGraph(start));
    }
    lexbfs_plus(graph, &VertexOrder::ending_with(graph.n(), start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::testkit::fixtures::worked_example;

    fn order(g: &Graph, s: &str) -> VertexOrder {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        g.order_from_tokens(&tokens).unwrap()
    }

    #[test]
    fn worked_example_pivots() {
        let g = worked_example();
        let rho = order(&g, "a b c d e f g h i j s");
        let mut snapshots = Vec::new();
        let run = lexbfs_plus_observed(&g, &rho, |_, p| {
            snapshots.push(p.format_with(|v| g.token(v)));
        })
        .unwrap();
        assert_eq!(g.format_order(&run.order), "s d c b a h g f e j i");
        assert_eq!(snapshots[0], "(s)(d,c,b,a)(j,i,h,g,f,e)");
        assert_eq!(snapshots[1], "(s)(d)(c)(b,a)(h)(j,i,g,f,e)");
        assert!(run.moves <= (g.n() + g.m()) as u64);
    }

    #[test]
    fn complete_graph_follows_tiebreak() {
        let k4 = build_graph(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ])
        .unwrap();
        let out = lexbfs_plus(&k4, &order(&k4, "a b c d")).unwrap();
        assert_eq!(k4.format_order(&out), "d c b a");
    }

    #[test]
    fn plain_lexbfs_starts_at_start() {
        let path = build_graph(&[("a", "b"), ("b", "c")]).unwrap();
        let out = lexbfs(&path, 1).unwrap();
        // canonical tiebreak (a, c, b): c is rightmost among the tied a, c
        assert_eq!(path.format_order(&out), "b c a");
        assert_eq!(lexbfs(&path, 5), Err(Error::StartNotInGraph(5)));
    }

    #[test]
    fn rejects_short_tiebreak() {
        let path = build_graph(&[("a", "b"), ("b", "c")]).unwrap();
        assert!(matches!(
            lexbfs_plus(&path, &VertexOrder::identity(2)),
            Err(Error::OrderLengthMismatch { .. })
        ));
    }
}
