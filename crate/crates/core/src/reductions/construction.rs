use super::HittingSetInstance;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which part of the construction a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Universe element.
    Element,
    /// Family set.
    Set,
    /// False-twin copy of a set, detached from the universe.
    SetCopy,
    ElementCode,
    ElementCodeTwin,
    SetCode,
    SetCodeTwin,
    ElementApex,
    ElementApexTwin,
    Apex,
    ApexTwin,
    SetApex,
    SetApexTwin,
}

impl Role {
    pub fn tag(self) -> &'static str {
        match self {
            Role::Element => "U",
            Role::Set => "F",
            Role::SetCopy => "F'",
            Role::ElementCode => "I_U",
            Role::ElementCodeTwin => "I'_U",
            Role::SetCode => "I_F",
            Role::SetCodeTwin => "I'_F",
            Role::ElementApex => "a_U",
            Role::ElementApexTwin => "a'_U",
            Role::Apex => "a",
            Role::ApexTwin => "a'",
            Role::SetApex => "a_F",
            Role::SetApexTwin => "a'_F",
        }
    }

    pub const ALL: [Role; 13] = [
        Role::Element,
        Role::Set,
        Role::SetCopy,
        Role::ElementCode,
        Role::ElementCodeTwin,
        Role::SetCode,
        Role::SetCodeTwin,
        Role::ElementApex,
        Role::ElementApexTwin,
        Role::Apex,
        Role::ApexTwin,
        Role::SetApex,
        Role::SetApexTwin,
    ];

    pub fn from_tag(tag: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.tag() == tag)
    }
}

/// How the central apex pair `a, a'` is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ApexWiring {
    /// `N(a) = U ∪ F ∪ F'` only. Then every `I_U` vertex and `a_U` is at
    /// distance 2 from a set `R` with a matching element but at distance 3
    /// from its copy `R'`, so `I_U ∪ I_F ∪ {a_U, a, a_F}` already resolves
    /// the graph and every instance maps to a yes-instance.
    Literal,
    /// Additionally joins `a` and `a'` to `I_U`, `I'_U`, `a_U` and `a'_U`.
    /// Then `F ∪ F'` is at distance exactly 2 from all of those, and a
    /// landmark outside `U` cannot separate `R` from `R'`.
    #[default]
    Bridged,
}

/// A Metric Dimension instance `(G, X, k)` with vertex cover `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// Sorted; every vertex outside the set vertices and their copies.
    pub vertex_cover: Vec<usize>,
    pub k: usize,
    pub roles: Vec<Role>,
    /// Code lengths for elements and sets.
    pub t_n: usize,
    pub t_m: usize,
    pub n: usize,
    pub m: usize,
    pub budget: usize,
}

impl ReductionOutput {
    pub fn vertices_with(&self, role: Role) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| self.roles[v] == role)
            .collect()
    }
}

/// `2⌈log₂ x⌉` for `x >= 1`.
pub fn code_length(x: usize) -> usize {
    2 * x.next_power_of_two().trailing_zeros() as usize
}

/// `count` distinct subsets of `0..t`, each of size `t/2`, as bitmasks.
///
/// Size-`t/2` subsets in colexicographic order (increasing mask value),
/// except that the upper half `{t/2, .., t-1}` is moved to second place:
/// with the lower half first, every index is used by some code whenever
/// `count >= 2`, which keeps every code vertex attached.
pub fn balanced_codes(count: usize, t: usize) -> Vec<u64> {
    let h = t / 2;
    let low = (1u64 << h) - 1;
    let high = low << h;
    let mut codes = Vec::with_capacity(count);
    codes.push(low);
    if count > 1 && high != low {
        codes.push(high);
    }
    let mut x = low;
    while codes.len() < count {
        // Gosper's hack: next mask with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
        if x >> t != 0 {
            break;
        }
        if x != high {
            codes.push(x);
        }
    }
    codes.truncate(count);
    codes
}

/// Builds the Metric Dimension instance for a hitting-set instance.
///
/// Vertex ids follow the role order `U, F, F', I_U, I'_U, I_F, I'_F,
/// a_U, a'_U, a, a', a_F, a'_F`:
/// - `u ∈ U` and `R ∈ F` are adjacent iff `u ∈ R`;
/// - each `u` (each `R`) is joined to a distinct `t_n/2`-subset of `I_U`
///   (`t_m/2`-subset of `I_F`);
/// - `N(a_U) = U`, `N(a) = U ∪ F`, `N(a_F) = F`, plus the bridging edges of
///   [`ApexWiring::Bridged`];
/// - `I'_U, I'_F, a'_U, a', a'_F` are true twins of their originals;
/// - `F'` are false twins of `F` with the `F'–U` edges dropped.
///
/// `X = V \ (F ∪ F')` and `k = ℓ + t_n + t_m + 3`.
pub fn reduce_to_metric_dimension(inst: &HittingSetInstance) -> Result<ReductionOutput> {
    reduce_with_wiring(inst, ApexWiring::Bridged)
}

pub fn reduce_with_wiring(
    inst: &HittingSetInstance,
    wiring: ApexWiring,
) -> Result<ReductionOutput> {
    let (n, m) = (inst.universe_size(), inst.m());
    if n < 2 || m < 2 {
        return Err(Error::DegenerateReduction { n, m });
    }
    let t_n = code_length(n);
    let t_m = code_length(m);

    let u0 = 0;
    let f0 = n;
    let fc0 = n + m;
    let iu0 = n + 2 * m;
    let iuc0 = iu0 + t_n;
    let if0 = iuc0 + t_n;
    let ifc0 = if0 + t_m;
    let apex0 = ifc0 + t_m;
    let total = apex0 + 6;
    let (a_u, a_u2, a, a2, a_f, a_f2) =
        (apex0, apex0 + 1, apex0 + 2, apex0 + 3, apex0 + 4, apex0 + 5);

    let mut roles = Vec::with_capacity(total);
    roles.extend(std::iter::repeat_n(Role::Element, n));
    roles.extend(std::iter::repeat_n(Role::Set, m));
    roles.extend(std::iter::repeat_n(Role::SetCopy, m));
    roles.extend(std::iter::repeat_n(Role::ElementCode, t_n));
    roles.extend(std::iter::repeat_n(Role::ElementCodeTwin, t_n));
    roles.extend(std::iter::repeat_n(Role::SetCode, t_m));
    roles.extend(std::iter::repeat_n(Role::SetCodeTwin, t_m));
    roles.extend([
        Role::ElementApex,
        Role::ElementApexTwin,
        Role::Apex,
        Role::ApexTwin,
        Role::SetApex,
        Role::SetApexTwin,
    ]);

    let mut edges = Vec::new();
    for (r, set) in inst.family().iter().enumerate() {
        for &u in set {
            edges.push((u0 + u, f0 + r));
        }
    }
    for (u, code) in balanced_codes(n, t_n).into_iter().enumerate() {
        for j in (0..t_n).filter(|j| code >> j & 1 == 1) {
            edges.push((u0 + u, iu0 + j));
            edges.push((u0 + u, iuc0 + j));
        }
    }
    for (r, code) in balanced_codes(m, t_m).into_iter().enumerate() {
        for j in (0..t_m).filter(|j| code >> j & 1 == 1) {
            for set_vertex in [f0 + r, fc0 + r] {
                edges.push((set_vertex, if0 + j));
                edges.push((set_vertex, ifc0 + j));
            }
        }
    }
    for j in 0..t_n {
        edges.push((iu0 + j, iuc0 + j));
    }
    for j in 0..t_m {
        edges.push((if0 + j, ifc0 + j));
    }
    for u in 0..n {
        for apex in [a_u, a_u2, a, a2] {
            edges.push((u0 + u, apex));
        }
    }
    for r in 0..m {
        for set_vertex in [f0 + r, fc0 + r] {
            for apex in [a, a2, a_f, a_f2] {
                edges.push((set_vertex, apex));
            }
        }
    }
    edges.extend([(a_u, a_u2), (a, a2), (a_f, a_f2)]);
    if wiring == ApexWiring::Bridged {
        for centre in [a, a2] {
            for v in (iu0..if0).chain([a_u, a_u2]) {
                edges.push((centre, v));
            }
        }
    }

    let graph = Graph::new(total, &edges)?;
    let vertex_cover: Vec<usize> = (0..total)
        .filter(|&v| !matches!(roles[v], Role::Set | Role::SetCopy))
        .collect();
    Ok(ReductionOutput {
        graph,
        vertex_cover,
        k: inst.budget() + t_n + t_m + 3,
        roles,
        t_n,
        t_m,
        n,
        m,
        budget: inst.budget(),
    })
}
