use itertools::Itertools;

use super::is_resolving;
use crate::error::Result;
use crate::graph::{twin_classes, DistanceMatrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Twin-forced branch-and-bound.
    #[default]
    BranchAndBound,
    /// Every subset in order of size, then lexicographically. Oracle only.
    Naive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub set: Option<Vec<usize>>,
    /// Search nodes (branch-and-bound) or subsets tested (naive).
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdResult {
    pub md: usize,
    /// Sorted resolving set of size `md`.
    pub witness: Vec<usize>,
    pub nodes: u64,
}

/// Exact resolving-set search over one connected graph.
///
/// Every twin class of size `s` contributes `s - 1` members to any resolving
/// set, and which ones is immaterial since permuting twins is an
/// automorphism. Those vertices are fixed up front.
#[derive(Debug, Clone)]
pub struct ResolvingSearch {
    dist: DistanceMatrix,
    forced: Vec<usize>,
}

impl ResolvingSearch {
    pub fn new(g: &Graph) -> Result<Self> {
        let dist = DistanceMatrix::new(g)?;
        let mut forced: Vec<usize> = twin_classes(g)
            .into_iter()
            .flat_map(|c| {
                let keep = c.vertices.len() - 1;
                c.vertices.into_iter().take(keep)
            })
            .collect();
        forced.sort_unstable();
        Ok(ResolvingSearch { dist, forced })
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Vertices every minimum resolving set can be assumed to contain.
    pub fn forced(&self) -> &[usize] {
        &self.forced
    }

    pub fn find(&self, k: usize, engine: Engine) -> SearchOutcome {
        let n = self.dist.n();
        if k >= n {
            return SearchOutcome {
                set: Some((0..n).collect()),
                nodes: 0,
            };
        }
        match engine {
            Engine::Naive => self.find_naive(k),
            Engine::BranchAndBound => self.find_bnb(k),
        }
    }

    pub fn minimum(&self, engine: Engine) -> MdResult {
        let n = self.dist.n();
        let lower = match engine {
            Engine::BranchAndBound => self.forced.len().max(usize::from(n >= 2)),
            Engine::Naive => 0,
        };
        let mut nodes = 0;
        for k in lower..=n {
            let outcome = self.find(k, engine);
            nodes += outcome.nodes;
            if let Some(mut witness) = outcome.set {
                witness.sort_unstable();
                return MdResult {
                    md: witness.len(),
                    witness,
                    nodes,
                };
            }
        }
        unreachable!("the full vertex set always resolves")
    }

    fn find_naive(&self, k: usize) -> SearchOutcome {
        let n = self.dist.n();
        let mut nodes = 0;
        for size in 0..=k {
            for set in (0..n).combinations(size) {
                nodes += 1;
                if is_resolving(&self.dist, &set)
                    .map(|c| c.resolved)
                    .unwrap_or(false)
                {
                    return SearchOutcome {
                        set: Some(set),
                        nodes,
                    };
                }
            }
        }
        SearchOutcome { set: None, nodes }
    }

    fn find_bnb(&self, k: usize) -> SearchOutcome {
        let n = self.dist.n();
        if self.forced.len() > k {
            return SearchOutcome {
                set: None,
                nodes: 0,
            };
        }
        let mut state = Branching {
            dist: &self.dist,
            base: u64::from(self.dist.diameter()) + 1,
            chosen: vec![false; n],
            forbidden: vec![false; n],
            picked: Vec::with_capacity(k),
            nodes: 0,
        };
        let mut labels = vec![0u32; n];
        for &w in &self.forced {
            labels = state.refine(&labels, w);
            state.chosen[w] = true;
            state.picked.push(w);
        }
        let found = state.descend(&labels, k - self.forced.len());
        let mut set = found.then(|| state.picked.clone());
        if let Some(s) = set.as_mut() {
            s.sort_unstable();
        }
        SearchOutcome {
            set,
            nodes: state.nodes,
        }
    }
}

struct Branching<'a> {
    dist: &'a DistanceMatrix,
    /// Number of distinct distance values, diameter + 1.
    base: u64,
    chosen: Vec<bool>,
    forbidden: Vec<bool>,
    picked: Vec<usize>,
    nodes: u64,
}

impl Branching<'_> {
    /// Splits every class of `labels` by distance to `w`.
    fn refine(&self, labels: &[u32], w: usize) -> Vec<u32> {
        let row = self.dist.row(w);
        let mut keyed: Vec<(u32, u16, usize)> = labels
            .iter()
            .enumerate()
            .map(|(v, &l)| (l, row[v], v))
            .collect();
        keyed.sort_unstable();
        let mut out = vec![0u32; labels.len()];
        let mut next = 0u32;
        for i in 0..keyed.len() {
            if i > 0 && (keyed[i].0, keyed[i].1) != (keyed[i - 1].0, keyed[i - 1].1) {
                next += 1;
            }
            out[keyed[i].2] = next;
        }
        out
    }

    fn classes(labels: &[u32]) -> Vec<Vec<usize>> {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for (v, &l) in labels.iter().enumerate() {
            buckets[l as usize].push(v);
        }
        buckets.retain(|c| c.len() >= 2);
        buckets
    }

    /// Number of still-unresolved pairs that landmark `w` would resolve.
    fn split_score(&self, classes: &[Vec<usize>], w: usize) -> u64 {
        let row = self.dist.row(w);
        let mut counts = vec![0u64; self.base as usize];
        let mut score = 0;
        for class in classes {
            let size = class.len() as u64;
            counts.iter_mut().for_each(|c| *c = 0);
            for &v in class {
                counts[row[v] as usize] += 1;
            }
            let same: u64 = counts.iter().map(|&c| c * c.saturating_sub(1) / 2).sum();
            score += size * (size - 1) / 2 - same;
        }
        score
    }

    fn descend(&mut self, labels: &[u32], budget: usize) -> bool {
        self.nodes += 1;
        let classes = Self::classes(labels);
        if classes.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        // `budget` more landmarks split a class into at most base^budget parts.
        let largest = classes.iter().map(Vec::len).max().unwrap_or(0) as u64;
        let capacity = self.base.checked_pow(budget as u32).unwrap_or(u64::MAX);
        if largest > capacity {
            return false;
        }

        // Some landmark must separate the pair with the fewest admissible
        // separators; branch over those.
        let n = labels.len();
        let free: Vec<usize> = (0..n)
            .filter(|&w| !self.chosen[w] && !self.forbidden[w])
            .collect();
        let mut best: Option<(usize, (usize, usize))> = None;
        for class in &classes {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    let (du, dv) = (self.dist.row(u), self.dist.row(v));
                    let count = free.iter().filter(|&&w| du[w] != dv[w]).count();
                    if best.is_none_or(|(c, _)| count < c) {
                        best = Some((count, (u, v)));
                    }
                    if count == 0 {
                        return false;
                    }
                }
            }
        }
        let (_, (u, v)) = best.expect("classes is nonempty");
        let (du, dv) = (self.dist.row(u), self.dist.row(v));
        let mut candidates: Vec<(u64, usize)> = free
            .iter()
            .filter(|&&w| du[w] != dv[w])
            .map(|&w| (self.split_score(&classes, w), w))
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = Vec::with_capacity(candidates.len());
        let mut found = false;
        for &(_, w) in &candidates {
            let next = self.refine(labels, w);
            self.chosen[w] = true;
            self.picked.push(w);
            if self.descend(&next, budget - 1) {
                found = true;
                break;
            }
            self.picked.pop();
            self.chosen[w] = false;
            // Later siblings need not consider w: every solution containing w
            // was covered by this branch.
            self.forbidden[w] = true;
            excluded.push(w);
        }
        for w in excluded {
            self.forbidden[w] = false;
        }
        found
    }
}

/// A resolving set of size at most `k`, if one exists.
pub fn has_resolving_set_of_size(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    Ok(ResolvingSearch::new(g)?.find(k, Engine::BranchAndBound).set)
}

pub fn metric_dimension_exact(g: &Graph) -> Result<MdResult> {
    Ok(ResolvingSearch::new(g)?.minimum(Engine::BranchAndBound))
}
