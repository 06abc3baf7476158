use crate::graph::Graph;

/// `τ(u, v) = |N(u) △ N(v)|` over open neighbourhoods.
pub fn tau(g: &Graph, u: usize, v: usize) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut shared) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                shared += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * shared
}

/// Graph on the same vertices joining `u` and `v` iff `τ(u, v) <= k`.
///
/// Vertices far apart in this graph (τ ≥ k + 1) are separated by any
/// `n - k` landmarks, so an independent set of size `k` here is a
/// co-resolving set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub h: Graph,
    pub k: usize,
}

pub fn build_aux_graph(g: &Graph, k: usize) -> AuxGraph {
    let n = g.n();
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = vec![0u64; words];
            for &w in g.neighbors(v) {
                row[w / 64] |= 1 << (w % 64);
            }
            row
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let diff: u32 = rows[u]
                .iter()
                .zip(&rows[v])
                .map(|(a, b)| (a ^ b).count_ones())
                .sum();
            if diff as usize <= k {
                edges.push((u, v));
            }
        }
    }
    AuxGraph {
        h: Graph::new(n, &edges).expect("aux graph shares the vertex set"),
        k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn path_tau_values() {
        let g = path(4);
        let all: Vec<usize> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .iter()
            .map(|&(u, v)| tau(&g, u, v))
            .collect();
        assert_eq!(all, vec![3, 1, 2, 4, 1, 3]);
    }

    #[test]
    fn path_aux_graphs() {
        let h = build_aux_graph(&path(4), 2).h;
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(build_aux_graph(&path(4), 0).h.m(), 0);
    }

    #[test]
    fn triangle_true_twins_have_tau_two() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tau(&k3, 0, 1), 2);
        assert_eq!(build_aux_graph(&k3, 2).h, k3);
        assert_eq!(build_aux_graph(&k3, 1).h.m(), 0);
    }

    #[test]
    fn bitset_rows_cross_word_boundary() {
        let g = path(130);
        let h = build_aux_graph(&g, 2).h;
        for u in 0..130 {
            for v in u + 1..130 {
                assert_eq!(h.has_edge(u, v), tau(&g, u, v) <= 2, "({u}, {v})");
            }
        }
    }
}
