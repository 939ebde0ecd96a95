//! Fixed inputs shared by the benchmarks.

use jahangir_core::{Graph, StandardGraph};

/// A deterministic order-`n` graph with irregular degrees.
pub fn scrambled(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| (u * 7 + v * 13 + u * v) % 5 < 2);
    Graph::from_edges(n, edges).expect("valid order")
}

/// `K_{m-1} ∪ K_{n-1}`, the single-path witness.
pub fn two_cliques(n: usize, m: usize) -> Graph {
    StandardGraph::UnionOfCompletes(vec![m - 1, n - 1])
        .build()
        .expect("valid sizes")
}
