use std::collections::HashMap;

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinKind {
    /// Equal closed neighbourhoods (members are pairwise adjacent).
    True,
    /// Equal open neighbourhoods (members are pairwise non-adjacent).
    False,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    /// Sorted, nonempty.
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

impl TwinClass {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Partitions the vertex set into maximal twin classes, ordered by smallest
/// member.
///
/// A vertex cannot have both a true twin and a false twin: if `N[u] = N[v]`
/// and `N(u) = N(w)` then `w` would be adjacent to itself. So grouping by
/// open and by closed neighbourhood separately yields a partition.
pub fn twin_classes(g: &Graph) -> Vec<TwinClass> {
    let n = g.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<TwinClass> = Vec::new();

    let mut by_open: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for v in 0..n {
        by_open.entry(g.neighbors(v)).or_default().push(v);
    }
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut c = g.neighbors(v).to_vec();
            let pos = c.partition_point(|&w| w < v);
            c.insert(pos, v);
            c
        })
        .collect();
    let mut by_closed: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (v, c) in closed.iter().enumerate() {
        by_closed.entry(c.as_slice()).or_default().push(v);
    }

    for (groups, kind) in [(by_open, TwinKind::False), (by_closed, TwinKind::True)] {
        for (_, members) in groups {
            if members.len() >= 2 {
                for &v in &members {
                    debug_assert!(class_of[v].is_none());
                    class_of[v] = Some(classes.len());
                }
                classes.push(TwinClass {
                    vertices: members,
                    kind,
                });
            }
        }
    }
    for (v, class) in class_of.iter().enumerate() {
        if class.is_none() {
            classes.push(TwinClass {
                vertices: vec![v],
                kind: TwinKind::Singleton,
            });
        }
    }
    for class in &mut classes {
        class.vertices.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c.vertices[0]);
    classes
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneResult {
    pub pruned: Graph,
    pub removed: usize,
    /// `kept_map[i]` is the original id of pruned vertex `i`; increasing.
    pub kept_map: Vec<usize>,
}

impl PruneResult {
    /// Original ids of the deleted vertices, sorted.
    pub fn removed_vertices(&self, original_n: usize) -> Vec<usize> {
        let mut kept = vec![false; original_n];
        for &v in &self.kept_map {
            kept[v] = true;
        }
        (0..original_n).filter(|&v| !kept[v]).collect()
    }

    pub fn to_original(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&v| self.kept_map[v]).collect();
        out.sort_unstable();
        out
    }
}

/// Shrinks every twin class to its two lowest-numbered members, repeating
/// until no class has three or more members.
pub fn prune(g: &Graph) -> PruneResult {
    let identity: Vec<usize> = g.vertices().collect();
    prune_in_order(g, &identity)
}

/// Like [`prune`], but each oversized class keeps the two members with the
/// smallest `priority` (indexed by original id) instead of the smallest ids.
pub fn prune_in_order(g: &Graph, priority: &[usize]) -> PruneResult {
    assert_eq!(priority.len(), g.n(), "priority must cover every vertex");
    let mut current = g.clone();
    let mut kept_map: Vec<usize> = g.vertices().collect();
    loop {
        let mut drop = vec![false; current.n()];
        let mut any = false;
        for class in twin_classes(&current) {
            if class.len() >= 3 {
                let mut members = class.vertices;
                members.sort_by_key(|&v| (priority[kept_map[v]], v));
                for &v in &members[2..] {
                    drop[v] = true;
                }
                any = true;
            }
        }
        if !any {
            break;
        }
        let keep: Vec<usize> = (0..current.n()).filter(|&v| !drop[v]).collect();
        current = current.induced_subgraph(&keep);
        kept_map = keep.iter().map(|&v| kept_map[v]).collect();
    }
    PruneResult {
        removed: g.n() - current.n(),
        pruned: current,
        kept_map,
    }
}
