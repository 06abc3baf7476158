//! Undirected simple graphs on the vertex set `0..n`, all-pairs hop
//! distances, and twin classes.

mod distance;
mod twins;

pub use distance::DistanceMatrix;
pub use twins::{prune, prune_in_order, twin_classes, PruneResult, TwinClass, TwinKind};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Largest supported vertex count; distances are stored as `u16`.
pub const MAX_VERTICES: usize = (1 << 15) - 1;

/// An undirected simple graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Sorted open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_vertices(&self, set: &[usize]) -> Result<()> {
        set.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in the order
    /// given. `keep` must hold distinct in-range vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect::<Vec<_>>();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            edge_count,
        }
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Returns the first pair `(0, v)` with no path, if any. Graphs on at
    /// most one vertex are connected.
    pub fn unreachable_pair(&self) -> Option<(usize, usize)> {
        if self.n() <= 1 {
            return None;
        }
        self.bfs(0).iter().position(Option::is_none).map(|v| (0, v))
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_pair().is_none()
    }

    pub fn ensure_connected(&self) -> Result<()> {
        match self.unreachable_pair() {
            Some((u, v)) => Err(Error::Disconnected { u, v }),
            None => Ok(()),
        }
    }
}
