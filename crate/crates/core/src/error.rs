use thiserror::Error;

use crate::chordal::ChordlessCycle;
use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input contains no vertices")]
    EmptyInput,
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("graph is disconnected: `{0}` and `{1}` lie in different components")]
    Disconnected(String, String),
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    VertexOutOfRange { endpoint: usize, n: usize },
    #[error("start vertex {0} is not a vertex of the graph")]
    StartNotInGraph(Vertex),
    #[error("unknown vertex token `{0}`")]
    UnknownToken(String),
    #[error("order is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),
    #[error("order has {found} entries, expected {expected}")]
    OrderLengthMismatch { expected: usize, found: usize },
    #[error("vertex {0} is not in the partition's ground set")]
    VertexNotInGroundSet(Vertex),
    #[error("vertex {0} has no neighbor to its left in the order")]
    NotASearchOrder(Vertex),
    #[error("not a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("tie-break order must end with the start vertex {0}")]
    RhoDoesNotEndAtStart(Vertex),
    #[error("tree is rooted at {root}, expected start vertex {start}")]
    RootMismatch { root: Vertex, start: Vertex },
    #[error("tree is not an L-tree of DFS on the graph")]
    NotDfsLtree,
    #[error("beta order places ancestor {ancestor} left of its descendant {vertex}")]
    InvalidBeta { vertex: Vertex, ancestor: Vertex },
    #[error("graph is not chordal; chordless cycle {0}")]
    NotChordal(ChordlessCycle),
    #[error("graph has {n} vertices, enumeration limit is {limit}")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
