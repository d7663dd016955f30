//! Inputs for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankforge_core::DirectedGraph;

/// Seeded random graph where each node links to up to `max_out` targets
/// and about one node in five is dangling.
pub fn synthetic_graph(n: usize, max_out: usize, seed: u64) -> DirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for s in 0..n {
        if rng.gen_ratio(1, 5) {
            continue;
        }
        for _ in 0..rng.gen_range(1..=max_out) {
            edges.push((s, rng.gen_range(0..n)));
        }
    }
    DirectedGraph::from_edges(n, &edges).expect("indices in range")
}

/// Seeded rank vector: a permutation of `1..=n`.
pub fn shuffled_ranks(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    v
}
