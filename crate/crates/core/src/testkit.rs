//! Deterministic instance generators and fixed fixtures.
//!
//! All randomness comes from [`SeededRng`]: SplitMix64 (state increment
//! `0x9E3779B97F4A7C15`, output mix multipliers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`, shifts 30/27/31) seeded directly with the user seed.
//! Bounded draws use the high 64 bits of the 128-bit product `x * bound`, so
//! any implementation of the same recipe reproduces the same instances.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexOrder};

pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Value in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Value in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// Fisher–Yates, drawing from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Random connected chordal graph on `n` vertices.
///
/// Vertices arrive one at a time. Each arrival picks an earlier vertex `u`
/// and attaches to a random subset of the clique `{u} ∪ A(u)` that contains
/// `u` and has between 1 and `k` members, where `A(u)` is the set `u` itself
/// attached to. Every attachment set is a clique, so the arrival order
/// reversed is a perfect elimination order. Vertex ids are shuffled at the
/// end so id order carries no structure.
pub fn gen_chordal(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n == 0 || k == 0 || (n > 1 && k >= n) {
        return Err(Error::InvalidParameters(format!(
            "gen_chordal needs n >= 1 and 1 <= k < n (got n={n}, k={k})"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let mut attach: Vec<Vec<Vertex>> = vec![Vec::new()];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.below(v);
        let mut clique = attach[u].clone();
        let size = rng.between(1, k.min(clique.len() + 1));
        // partial shuffle picks size-1 companions for u
        for i in 0..size - 1 {
            let j = rng.between(i, clique.len() - 1);
            clique.swap(i, j);
        }
        clique.truncate(size - 1);
        clique.push(u);
        for &w in &clique {
            edges.push((w, v));
        }
        attach.push(clique);
    }
    let mut relabel: Vec<Vertex> = (0..n).collect();
    rng.shuffle(&mut relabel);
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(a, b)| (relabel[a], relabel[b]))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Uniform order of `V ∖ {start}` followed by `start`.
pub fn gen_rho(graph: &Graph, start: Vertex, seed: u64) -> Result<VertexOrder> {
    if !graph.contains(start) {
        return Err(Error::StartNotInGraph(start));
    }
    let mut rng = SeededRng::new(seed);
    let mut seq: Vec<Vertex> = graph.vertices().filter(|&v| v != start).collect();
    rng.shuffle(&mut seq);
    seq.push(start);
    VertexOrder::new(seq)
}

/// One chordal graph per size; the i-th graph uses seed `seed + i`.
pub fn bench_family(k: usize, sizes: &[usize], seed: u64) -> Result<Vec<Graph>> {
    sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| gen_chordal(n, k, seed.wrapping_add(i as u64)))
        .collect()
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `extra_percent / 100`. Not necessarily
/// chordal.
pub fn gen_connected(n: usize, extra_percent: u32, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be positive".into()));
    }
    let mut rng = SeededRng::new(seed);
    let mut edges = Vec::new();
    let mut present = vec![false; n * n];
    for v in 1..n {
        let u = rng.below(v);
        edges.push((u, v));
        present[u * n + v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.below(100) < extra_percent as usize {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Small fixed graphs used across tests, examples, and the CLI docs.
pub mod fixtures {
    use crate::graph::{build_graph, Graph};

    /// The 11-vertex chordal example graph with vertices `s, a..j`.
    pub const WORKED_EXAMPLE_EDGES: [(&str, &str); 20] = [
        ("s", "a"),
        ("s", "b"),
        ("s", "c"),
        ("s", "d"),
        ("a", "b"),
        ("a", "c"),
        ("b", "c"),
        ("c", "d"),
        ("c", "e"),
        ("c", "f"),
        ("c", "g"),
        ("c", "h"),
        ("d", "h"),
        ("e", "g"),
        ("f", "g"),
        ("g", "h"),
        ("g", "i"),
        ("g", "j"),
        ("h", "j"),
        ("i", "j"),
    ];

    /// `(child, parent)` pairs of the L-tree of the example's LexBFS⁺ order,
    /// rooted at `s`.
    pub const WORKED_EXAMPLE_TREE: [(&str, &str); 10] = [
        ("d", "s"),
        ("c", "d"),
        ("b", "c"),
        ("a", "b"),
        ("h", "c"),
        ("g", "h"),
        ("f", "g"),
        ("e", "g"),
        ("j", "g"),
        ("i", "j"),
    ];

    pub fn worked_example() -> Graph {
        build_graph(&WORKED_EXAMPLE_EDGES).expect("fixture is valid")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle is valid")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path is valid")
    }

    /// K₄ minus the edge {1, 4}, on tokens `1..4`.
    pub fn diamond() -> Graph {
        build_graph(&[("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("3", "4")])
            .expect("diamond is valid")
    }

    /// The Petersen graph (non-chordal, girth 5).
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // reference outputs of SplitMix64 seeded with 0
        let mut rng = SeededRng::new(0);
        assert_eq!(rng.next_u64(), 0xE220A8397B1DCDAF);
        assert_eq!(rng.next_u64(), 0x6E789E6AA1B965F4);
    }

    #[test]
    fn chordal_generator_parameters() {
        assert_eq!(gen_chordal(1, 1, 7).unwrap().n(), 1);
        assert!(gen_chordal(0, 1, 0).is_err());
        assert!(gen_chordal(5, 0, 0).is_err());
        assert!(gen_chordal(5, 5, 0).is_err());
        let tree = gen_chordal(50, 1, 3).unwrap();
        assert_eq!(tree.m(), 49);
    }

    #[test]
    fn generation_is_seed_stable() {
        assert_eq!(
            gen_chordal(80, 4, 11).unwrap(),
            gen_chordal(80, 4, 11).unwrap()
        );
        assert_ne!(
            gen_chordal(80, 4, 11).unwrap(),
            gen_chordal(80, 4, 12).unwrap()
        );
        let g = gen_chordal(30, 3, 5).unwrap();
        assert_eq!(gen_rho(&g, 4, 9).unwrap(), gen_rho(&g, 4, 9).unwrap());
    }

    #[test]
    fn rho_ends_with_start() {
        let g = gen_chordal(20, 3, 1).unwrap();
        for seed in 0..1000 {
            let start = seed as usize % 20;
            assert_eq!(gen_rho(&g, start, seed).unwrap().last(), Some(start));
        }
        let single = gen_chordal(1, 1, 0).unwrap();
        assert_eq!(gen_rho(&single, 0, 3).unwrap().as_slice(), &[0]);
        assert_eq!(gen_rho(&g, 99, 0), Err(Error::StartNotInGraph(99)));
    }

    #[test]
    fn bench_family_shapes() {
        assert!(bench_family(3, &[], 0).unwrap().is_empty());
        let one = bench_family(1, &[4], 0).unwrap();
        assert_eq!((one[0].n(), one[0].m()), (4, 3));
    }
}
