//! Named graphs and small test populations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generated edges are in range and loop-free")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    build(leaves + 1, &edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i – i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, &edges)
}

/// The `d`-dimensional hypercube on bit strings.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    build(n, &edges)
}

/// Every connected labelled graph on `n` vertices, ordered by edge bitmask
/// over the pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn all_connected(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration is limited to n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            build(n, &edges)
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Connected `G(n, 1/2)` samples by rejection, reproducible from `seed`.
pub fn random_connected(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let g = build(n, &edges);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Connected graphs with `n <= 7`: all of them for `n <= 5`, then
/// `per_size` random ones for each of `n = 6, 7`.
pub fn small_population(per_size: usize, seed: u64) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(all_connected).collect();
    for n in [6, 7] {
        graphs.extend(random_connected(n, per_size, seed.wrapping_add(n as u64)));
    }
    graphs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        // labelled connected graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5).map(|n| all_connected(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(petersen().m(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        let q3 = hypercube(3);
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(complete(4).m(), 6);
        assert_eq!(star(3).degree(0), 3);
        assert_eq!(path(1).n(), 1);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_connected(7, 20, 3);
        assert_eq!(a, random_connected(7, 20, 3));
        assert!(a.iter().all(|g| g.n() == 7 && g.is_connected()));
        assert_eq!(small_population(10, 0).len(), 1 + 1 + 4 + 38 + 728 + 20);
    }
}
