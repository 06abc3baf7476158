use super::{build_aux_graph, SavingInstance};
use crate::error::{Error, Result};
use crate::graph::{prune, twin_classes, Graph, PruneResult};
use crate::resolving::is_co_resolving;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneousKind {
    Clique,
    IndependentSet,
}

/// A vertex set inducing a clique or an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneous {
    pub kind: HomogeneousKind,
    pub vertices: Vec<usize>,
}

/// Looks for a clique or independent set of size `2k` inside `candidates`.
///
/// If every vertex has fewer than `4k²` neighbours inside the candidate set,
/// closed neighbourhoods are packed greedily (ascending id) into an
/// independent set. Otherwise a clique is grown from the first high-degree
/// vertex `u_1` by repeatedly picking the smallest common neighbour
/// `u_i ∈ S_{i-1}` and shrinking `S_i = S_{i-1} ∩ N(u_i)`.
///
/// When the candidate set is the closed neighbourhood of a vertex of degree
/// at least `8k³` in the auxiliary graph of a pruned graph, the chosen branch
/// always succeeds. On smaller candidate sets a failed branch falls back to
/// the other one; `None` means neither found `2k` vertices.
pub fn find_homogeneous_2k(g: &Graph, candidates: &[usize], k: usize) -> Option<Homogeneous> {
    let target = 2 * k;
    let mut s = candidates.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut inside = vec![false; g.n()];
    for &v in &s {
        inside[v] = true;
    }
    let inner_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| inside[w]).count();
    if target == 0 {
        return Some(Homogeneous {
            kind: HomogeneousKind::IndependentSet,
            vertices: Vec::new(),
        });
    }

    let pack = || {
        let mut blocked = vec![false; g.n()];
        let mut packed = Vec::new();
        for &v in &s {
            if packed.len() == target {
                break;
            }
            if blocked[v] {
                continue;
            }
            packed.push(v);
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
        (packed.len() == target).then_some(Homogeneous {
            kind: HomogeneousKind::IndependentSet,
            vertices: packed,
        })
    };
    let grow_clique = |first: usize| {
        let mut clique = vec![first];
        let mut common: Vec<usize> = g
            .neighbors(first)
            .iter()
            .copied()
            .filter(|&w| inside[w])
            .collect();
        while clique.len() < target {
            let Some(&next) = common.first() else { break };
            clique.push(next);
            common.retain(|&w| g.has_edge(next, w));
        }
        clique.sort_unstable();
        (clique.len() == target).then_some(Homogeneous {
            kind: HomogeneousKind::Clique,
            vertices: clique,
        })
    };

    let high = 4 * k * k;
    match s.iter().copied().find(|&v| inner_degree(v) >= high) {
        Some(first) => grow_clique(first).or_else(pack),
        None => pack().or_else(|| {
            // Below the size the degree argument needs; try the densest vertex.
            let densest = s
                .iter()
                .copied()
                .max_by_key(|&v| (inner_degree(v), std::cmp::Reverse(v)))?;
            grow_clique(densest)
        }),
    }
}

fn homogeneous_kind(g: &Graph, x: &[usize]) -> Option<HomogeneousKind> {
    let mut edges = 0usize;
    for (i, &u) in x.iter().enumerate() {
        edges += x[i + 1..].iter().filter(|&&v| g.has_edge(u, v)).count();
    }
    let pairs = x.len() * x.len().saturating_sub(1) / 2;
    if edges == 0 {
        Some(HomogeneousKind::IndependentSet)
    } else if edges == pairs {
        Some(HomogeneousKind::Clique)
    } else {
        None
    }
}

/// One vertex from each twin class meeting `x`, where `x` is a clique or
/// independent set of size `2k` in a pruned connected graph.
///
/// Two members of `x` from different twin classes differ in a neighbour
/// outside `x`, which stays a landmark, so the representatives are
/// co-resolving; pruning leaves at most two per class, so there are at
/// least `k` of them. The result is checked before it is returned.
pub fn co_resolving_from_homogeneous(g: &Graph, x: &[usize], k: usize) -> Result<Vec<usize>> {
    g.check_vertices(x)?;
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    if x.len() != 2 * k {
        return Err(Error::Precondition(format!(
            "homogeneous set has {} distinct vertices, expected 2k = {}",
            x.len(),
            2 * k
        )));
    }
    let classes = twin_classes(g);
    if let Some(big) = classes.iter().find(|c| c.len() > 2) {
        return Err(Error::Precondition(format!(
            "graph is not pruned: twin class {:?}",
            big.vertices
        )));
    }
    if homogeneous_kind(g, &x).is_none() {
        return Err(Error::Precondition(format!(
            "{x:?} is neither a clique nor an independent set"
        )));
    }

    let mut class_of = vec![0usize; g.n()];
    for (i, c) in classes.iter().enumerate() {
        for &v in &c.vertices {
            class_of[v] = i;
        }
    }
    let mut used = vec![false; classes.len()];
    let mut reps = Vec::new();
    for &v in &x {
        if !used[class_of[v]] {
            used[class_of[v]] = true;
            reps.push(v);
        }
    }
    if reps.len() < k {
        return Err(Error::Internal(format!(
            "only {} twin classes among {x:?}, need {k}",
            reps.len()
        )));
    }
    if let Some((u, v)) = is_co_resolving(g, &reps)?.unresolved_pair {
        return Err(Error::Internal(format!(
            "representatives {reps:?} leave ({u}, {v}) unresolved"
        )));
    }
    Ok(reps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Reduced,
    TrivialYes,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Reduced => "reduced",
            Verdict::TrivialYes => "trivial-yes",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelOutcome {
    pub verdict: Verdict,
    /// The pruned instance, or [`SavingInstance::trivial_yes`].
    pub instance: SavingInstance,
    /// Sorted co-resolving set of the pruned graph (pruned ids), size ≥ k.
    /// Present exactly for trivial-yes verdicts.
    pub certificate: Option<Vec<usize>>,
    pub prune: PruneResult,
    /// Largest degree in the auxiliary graph of the pruned graph.
    pub aux_max_degree: usize,
}

impl KernelOutcome {
    /// The certificate in the input graph's vertex ids. Deleted twins stay
    /// landmarks, so it is co-resolving there as well.
    pub fn certificate_original(&self) -> Option<Vec<usize>> {
        self.certificate.as_ref().map(|c| self.prune.to_original(c))
    }
}

fn cube(k: usize) -> u128 {
    (k as u128).pow(3)
}

/// Vertex-count bound on reduced instances: `8k⁴`.
pub fn kernel_size_bound(k: usize) -> u128 {
    8 * cube(k) * k as u128
}

/// Prunes, then either proves the instance yes (with a certificate) or
/// returns the pruned instance, which then has fewer than `8k⁴` vertices.
///
/// Pruning leaves `k` unchanged: deleting `r` twins lowers both `n` and the
/// metric dimension by exactly `r`, so `md ≤ n - k` is preserved.
pub fn kernelize(inst: &SavingInstance) -> Result<KernelOutcome> {
    inst.graph.ensure_connected()?;
    let k = inst.k;
    let prune = prune(&inst.graph);
    let g = &prune.pruned;
    let n = g.n();
    let aux = build_aux_graph(g, k);
    let h = &aux.h;
    let aux_max_degree = h.vertices().map(|v| h.degree(v)).max().unwrap_or(0);

    let trivial = |certificate: Vec<usize>, prune: PruneResult| KernelOutcome {
        verdict: Verdict::TrivialYes,
        instance: SavingInstance::trivial_yes(),
        certificate: Some(certificate),
        prune,
        aux_max_degree,
    };

    let degree_bound = 8 * cube(k);
    if let Some(v) = h.vertices().find(|&v| h.degree(v) as u128 >= degree_bound) {
        let mut closed = h.neighbors(v).to_vec();
        closed.push(v);
        let homogeneous = find_homogeneous_2k(g, &closed, k).ok_or_else(|| {
            Error::Internal(format!(
                "no homogeneous 2k-set around high-degree vertex {v}"
            ))
        })?;
        let certificate = co_resolving_from_homogeneous(g, &homogeneous.vertices, k)?;
        return Ok(trivial(certificate, prune));
    }

    if n as u128 >= kernel_size_bound(k) {
        // Max degree < 8k³ and n ≥ 8k⁴, so greedy finds k independent vertices.
        let mut taken = vec![false; n];
        let mut independent = Vec::with_capacity(k);
        for v in 0..n {
            if independent.len() == k {
                break;
            }
            if h.neighbors(v).iter().all(|&w| !taken[w]) {
                taken[v] = true;
                independent.push(v);
            }
        }
        if independent.len() < k {
            return Err(Error::Internal(format!(
                "greedy independent set in the auxiliary graph has size {} < {k}",
                independent.len()
            )));
        }
        if let Some((u, v)) = is_co_resolving(g, &independent)?.unresolved_pair {
            return Err(Error::Internal(format!(
                "independent set {independent:?} leaves ({u}, {v}) unresolved"
            )));
        }
        return Ok(trivial(independent, prune));
    }

    Ok(KernelOutcome {
        verdict: Verdict::Reduced,
        instance: SavingInstance::new(g.clone(), k),
        certificate: None,
        prune,
        aux_max_degree,
    })
}
