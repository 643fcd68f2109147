//! Lexicographic graph searches.
//!
//! * [`lexbfs`]: LexBFS and LexBFS⁺ by partition refinement in O(n + m).
//! * [`trees`]: F-trees, L-trees, DFS L-tree recognition, tree DFS⁺.
//! * [`ordering`]: from a DFS L-tree to a search order with that L-tree.
//! * [`chordal`]: LexDFS⁺ on chordal graphs in O(n + m), plus recognition of
//!   LexDFS orders and L-trees there.
//! * [`oracle`]: literal label simulations and four-point checkers.
//! * [`testkit`]: seeded generators for chordal instances.

pub mod bench;
pub mod chordal;
pub mod error;
pub mod graph;
pub mod io;
pub mod lexbfs;
pub mod oracle;
pub mod ordering;
pub mod partition;
pub mod testkit;
pub mod trees;

pub use chordal::{
    check_chordal, is_chordal, lexdfs_chordal, lexdfs_plus_chordal, verify_lexdfs_ltree,
    verify_lexdfs_order, Chordality, ChordlessCycle,
};
pub use error::{Error, Result};
pub use graph::{bfs_order, build_graph, dfs_plus, Graph, GraphBuilder, Vertex, VertexOrder};
pub use lexbfs::{lexbfs, lexbfs_plus};
pub use ordering::ordering;
pub use partition::OrderedPartition;
pub use trees::{f_tree, is_dfs_ltree, l_tree, tree_dfs_plus, tree_equal, RootedSpanningTree};
