//! Seeded random graphs and out-trees. The same seed always gives the same
//! graphs on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`: each of the `n(n-1)/2` pairs becomes an edge independently
/// with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_unchecked(n, false, edges)
}

/// Random recursive tree on `n` vertices with every edge directed away from
/// the root, under a random labelling so the root is not always 0.
pub fn random_out_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let edges = (1..n).map(|i| (label[rng.gen_range(0..i)], label[i]));
    Graph::from_edges_unchecked(n, true, edges)
}

/// `count` undirected graphs with 1 to `max_n` vertices and edge
/// probabilities spread over `[0.15, 0.85]`.
pub fn undirected_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            let p = r.gen_range(0.15..0.85);
            random_graph(&mut r, n, p)
        })
        .collect()
}

/// `count` out-trees with 1 to `max_n` vertices.
pub fn out_tree_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            random_out_tree(&mut r, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        let a = undirected_corpus(7, 20, 10);
        let b = undirected_corpus(7, 20, 10);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|g| (1..=10).contains(&g.order()) && !g.is_directed()));
        assert_ne!(a, undirected_corpus(8, 20, 10));
    }

    #[test]
    fn out_trees_have_one_root() {
        for g in out_tree_corpus(0, 50, 12) {
            let n = g.order();
            assert_eq!(g.edge_count(), n - 1);
            let roots = (0..n).filter(|&v| g.in_degree(v) == 0).count();
            assert_eq!(roots, 1);
            assert!((0..n).all(|v| g.in_degree(v) <= 1));
        }
    }
}
