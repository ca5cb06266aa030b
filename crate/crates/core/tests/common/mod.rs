#![allow(dead_code)]

use elc_core::{BitVector, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_set<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    VertexSet::from_bits(BitVector::from_bools((0..n).map(|_| rng.gen_bool(0.5))))
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

pub fn all_sets(n: usize) -> Vec<VertexSet> {
    (0u64..1 << n)
        .map(|w| VertexSet::from_bits(BitVector::from_word(n, w)))
        .collect()
}

/// A random graph equivalent to `g`, reached by `moves` random edge moves.
pub fn random_walk<R: Rng>(rng: &mut R, g: &Graph, moves: usize) -> Graph {
    let mut h = g.clone();
    for _ in 0..moves {
        let edges = h.edges();
        if edges.is_empty() {
            break;
        }
        let (i, j) = edges[rng.gen_range(0..edges.len())];
        h = h.edge_local_complement(i, j).unwrap();
    }
    h
}
