use super::{complement, equidistance_classes, is_resolving, sorted_set};
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

/// Given a co-resolving set `t`, builds `S ⊆ V \ t` with `|S| <= |t|` that
/// resolves `t`.
///
/// Starting from `S = ∅`, repeatedly takes the lexicographically smallest
/// pair of `S`-equidistant vertices in `t` and adds the smallest-id vertex of
/// `V \ t` that separates them. Each addition splits at least one class, so
/// at most `|t| - 1` rounds run.
pub fn resolve_witness(dist: &DistanceMatrix, t: &[usize]) -> Result<Vec<usize>> {
    dist.check_vertices(t)?;
    let t = sorted_set(t);
    let outside = complement(dist.n(), &t);
    if let Some((u, v)) = is_resolving(dist, &outside)?.unresolved_pair {
        return Err(Error::NotCoResolving { u, v });
    }

    let mut witness: Vec<usize> = Vec::new();
    let mut classes = equidistance_classes(dist, &witness, &t)?.len();
    loop {
        let partition = equidistance_classes(dist, &witness, &t)?;
        debug_assert!(witness.is_empty() || partition.len() > classes);
        classes = partition.len();
        let Some((u, v)) = partition.smallest_unresolved_pair() else {
            break;
        };
        let (du, dv) = (dist.row(u), dist.row(v));
        let w = outside
            .iter()
            .copied()
            .find(|&w| du[w] != dv[w])
            .ok_or_else(|| Error::Internal(format!("no separator for ({u}, {v}) outside t")))?;
        witness.push(w);
    }
    witness.sort_unstable();
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn dm(n: usize, edges: &[(usize, usize)]) -> DistanceMatrix {
        DistanceMatrix::new(&Graph::new(n, edges).unwrap()).unwrap()
    }

    #[test]
    fn path_tail() {
        let d = dm(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(resolve_witness(&d, &[1, 2, 3]).unwrap(), vec![0]);
    }

    #[test]
    fn empty_target() {
        let d = dm(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(resolve_witness(&d, &[]).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn cycle_half() {
        let d = dm(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let s = resolve_witness(&d, &[2, 3]).unwrap();
        assert!(s.len() <= 2);
        assert!(s.iter().all(|v| [0, 1].contains(v)));
        assert_eq!(equidistance_classes(&d, &s, &[2, 3]).unwrap().len(), 2);
    }

    #[test]
    fn rejects_non_co_resolving() {
        let d = dm(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        // complement {0, 2} cannot separate 1 and 3
        assert_eq!(
            resolve_witness(&d, &[1, 3]),
            Err(Error::NotCoResolving { u: 1, v: 3 })
        );
    }
}
