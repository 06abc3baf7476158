use super::Graph;
use crate::error::{Error, Result};

/// Dense all-pairs hop-count matrix of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    /// One BFS per source. Fails on disconnected graphs, naming the first
    /// unreachable pair found from vertex 0.
    pub fn new(g: &Graph) -> Result<Self> {
        g.ensure_connected()?;
        let n = g.n();
        let mut d = vec![0u16; n * n];
        let mut queue = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for source in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            queue.clear();
            queue.push(source);
            seen[source] = true;
            let row = &mut d[source * n..(source + 1) * n];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let next = row[u] + 1;
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        row[w] = next;
                        queue.push(w);
                    }
                }
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    /// Distances from `u` to every vertex.
    #[inline]
    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u16 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_vertices(&self, set: &[usize]) -> Result<()> {
        set.iter().try_for_each(|&v| self.check_vertex(v))
    }
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Floyd–Warshall; independent of the BFS route.
    fn floyd(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.n();
        let inf = u32::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for u in 0..n {
            d[u][u] = 0;
            for &v in g.neighbors(u) {
                d[u][v] = 1;
            }
        }
        for w in 0..n {
            for u in 0..n {
                for v in 0..n {
                    if d[u][w] + d[w][v] < d[u][v] {
                        d[u][v] = d[u][w] + d[w][v];
                    }
                }
            }
        }
        d
    }

    fn assert_metric(g: &Graph, dm: &DistanceMatrix) {
        let n = g.n();
        for u in 0..n {
            assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                assert_eq!(dm.get(u, v), dm.get(v, u));
                assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
    }

    #[test]
    fn path_distances() {
        let g = path(4);
        let dm = DistanceMatrix::new(&g).unwrap();
        assert_eq!(dm.get(0, 3), 3);
        assert_eq!(dm.get(1, 2), 1);
        assert_eq!(dm.diameter(), 3);
        assert_metric(&g, &dm);
    }

    #[test]
    fn cycle_distances() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.get(1, 3), 2);
        assert_metric(&g, &dm);
    }

    #[test]
    fn singleton() {
        let dm = DistanceMatrix::new(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(dm.row(0), &[0]);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            DistanceMatrix::new(&g),
            Err(Error::Disconnected { u: 0, v: 3 })
        );
    }

    #[test]
    fn matches_floyd_warshall() {
        let g = Graph::new(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 2),
            ],
        )
        .unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        let oracle = floyd(&g);
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(u32::from(dm.get(u, v)), oracle[u][v]);
            }
        }
        assert_metric(&g, &dm);
    }
}
