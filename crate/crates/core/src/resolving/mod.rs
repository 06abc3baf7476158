//! Resolving sets: verification, equidistance classes, exact metric
//! dimension, and small resolving witnesses for co-resolving sets.

mod search;
mod witness;

pub use search::{
    has_resolving_set_of_size, metric_dimension_exact, Engine, MdResult, ResolvingSearch,
    SearchOutcome,
};
pub use witness::resolve_witness;

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionCheck {
    pub resolved: bool,
    /// Lexicographically smallest pair `(u, v)`, `u < v`, left unresolved.
    pub unresolved_pair: Option<(usize, usize)>,
}

impl ResolutionCheck {
    fn from_pair(pair: Option<(usize, usize)>) -> Self {
        ResolutionCheck {
            resolved: pair.is_none(),
            unresolved_pair: pair,
        }
    }
}

/// Target vertices grouped by their distance vectors to a probe set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistancePartition {
    pub probe: Vec<usize>,
    pub target: Vec<usize>,
    /// Sorted classes, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl EquidistancePartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Lexicographically smallest pair of distinct probe-equidistant targets.
    pub fn smallest_unresolved_pair(&self) -> Option<(usize, usize)> {
        self.classes
            .iter()
            .find(|c| c.len() >= 2)
            .map(|c| (c[0], c[1]))
    }

    /// Smallest member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

fn sorted_set(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

pub fn equidistance_classes(
    dist: &DistanceMatrix,
    probe: &[usize],
    target: &[usize],
) -> Result<EquidistancePartition> {
    dist.check_vertices(probe)?;
    dist.check_vertices(target)?;
    let probe = sorted_set(probe);
    let target = sorted_set(target);
    let classes = group_by_signature(dist, &probe, &target);
    Ok(EquidistancePartition {
        probe,
        target,
        classes,
    })
}

/// `target` must be sorted; the resulting classes are then sorted and
/// ordered by first member.
fn group_by_signature(dist: &DistanceMatrix, probe: &[usize], target: &[usize]) -> Vec<Vec<usize>> {
    let mut index: HashMap<Vec<u16>, usize> = HashMap::with_capacity(target.len());
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &t in target {
        let row = dist.row(t);
        let signature: Vec<u16> = probe.iter().map(|&w| row[w]).collect();
        let slot = *index.entry(signature).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(t);
    }
    classes
}

/// Does `set` resolve every pair of distinct vertices? Graphs on at most
/// one vertex are resolved by any set, including the empty one.
pub fn is_resolving(dist: &DistanceMatrix, set: &[usize]) -> Result<ResolutionCheck> {
    let all: Vec<usize> = (0..dist.n()).collect();
    resolves(dist, set, &all)
}

/// Does `set` resolve every pair of distinct vertices of `target`?
pub fn resolves(dist: &DistanceMatrix, set: &[usize], target: &[usize]) -> Result<ResolutionCheck> {
    let partition = equidistance_classes(dist, set, target)?;
    Ok(ResolutionCheck::from_pair(
        partition.smallest_unresolved_pair(),
    ))
}

/// Is `V \ t` a resolving set? Only pairs inside `t` can fail (any pair with
/// a landmark is resolved by that landmark), so this needs a BFS from each
/// member of `t` only, not the full distance matrix.
pub fn is_co_resolving(g: &Graph, t: &[usize]) -> Result<ResolutionCheck> {
    g.ensure_connected()?;
    g.check_vertices(t)?;
    let t = sorted_set(t);
    let mut in_t = vec![false; g.n()];
    for &v in &t {
        in_t[v] = true;
    }
    let rows: Vec<Vec<usize>> = t
        .iter()
        .map(|&v| {
            g.bfs(v)
                .into_iter()
                .map(|d| d.unwrap_or(usize::MAX))
                .collect()
        })
        .collect();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let separated = (0..g.n()).any(|w| !in_t[w] && rows[i][w] != rows[j][w]);
            if !separated {
                return Ok(ResolutionCheck::from_pair(Some((t[i], t[j]))));
            }
        }
    }
    Ok(ResolutionCheck::from_pair(None))
}

/// Sorted complement of `set` within `0..n`.
pub fn complement(n: usize, set: &[usize]) -> Vec<usize> {
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    (0..n).filter(|&v| !member[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn dm(n: usize, edges: &[(usize, usize)]) -> DistanceMatrix {
        DistanceMatrix::new(&Graph::new(n, edges).unwrap()).unwrap()
    }

    fn p4() -> DistanceMatrix {
        dm(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn c4() -> DistanceMatrix {
        dm(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn endpoint_resolves_path() {
        let check = is_resolving(&p4(), &[0]).unwrap();
        assert!(check.resolved);
        assert_eq!(check.unresolved_pair, None);
    }

    #[test]
    fn single_vertex_fails_on_cycle() {
        let check = is_resolving(&c4(), &[0]).unwrap();
        assert!(!check.resolved);
        assert_eq!(check.unresolved_pair, Some((1, 3)));
    }

    #[test]
    fn empty_set_resolves_singleton() {
        assert!(is_resolving(&dm(1, &[]), &[]).unwrap().resolved);
        assert!(!is_resolving(&dm(2, &[(0, 1)]), &[]).unwrap().resolved);
    }

    #[test]
    fn out_of_range_probe() {
        assert_eq!(
            is_resolving(&p4(), &[4]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn equidistance_examples() {
        let p = equidistance_classes(&c4(), &[0, 1], &[2, 3]).unwrap();
        assert_eq!(p.classes, vec![vec![2], vec![3]]);
        let p = equidistance_classes(&p4(), &[], &[1, 2, 3]).unwrap();
        assert_eq!(p.classes, vec![vec![1, 2, 3]]);
        let p = equidistance_classes(&p4(), &[0], &[1, 2, 3]).unwrap();
        assert_eq!(p.len(), 3);
        let p = equidistance_classes(&p4(), &[0], &[]).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn co_resolving_matches_full_check() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = DistanceMatrix::new(&g).unwrap();
        for mask in 0u32..32 {
            let t: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            let full = is_resolving(&d, &complement(5, &t)).unwrap();
            let fast = is_co_resolving(&g, &t).unwrap();
            assert_eq!(full.resolved, fast.resolved, "t = {t:?}");
        }
    }
}
