//! Random-partition algorithm for Saving Landmarks and its derandomisation.
//!
//! A partition `V = R ∪ B` succeeds when `R` splits into at least `k`
//! classes of `B`-equidistant vertices; one vertex per class is then a
//! co-resolving set. Conversely, a co-resolving `T` of size `k` has a
//! resolving witness `S ⊆ V \ T` with `|S| <= k`, and any partition with
//! `T ⊆ R`, `S ⊆ B` succeeds. A uniform partition does so with probability
//! at least `4^-k`.
//!
//! Trial partitions are reproducible: trial `i` under seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `i`; vertex `v` reads
//! bit `v % 64` of the `(v / 64)`-th `next_u64()` output, `0` meaning `R`.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    solve_exact_dual, universal_family, verify_co_resolving, Method, SavingAnswer, SavingInstance,
};
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::resolving::{equidistance_classes, EquidistancePartition};

/// Largest `k` for which the default `4^k` trial count is accepted.
pub const MAX_DEFAULT_TRIAL_K: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Sorted.
    pub red: Vec<usize>,
    /// Sorted.
    pub blue: Vec<usize>,
}

impl Partition {
    /// Validates that `red` and `blue` partition `0..n`.
    pub fn new(n: usize, red: &[usize], blue: &[usize]) -> Result<Self> {
        let mut seen = vec![false; n];
        for &v in red.iter().chain(blue) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::Precondition(format!(
                    "vertex {v} appears twice in the partition"
                )));
            }
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Precondition(format!(
                "vertex {v} is in neither side"
            )));
        }
        let (mut red, mut blue) = (red.to_vec(), blue.to_vec());
        red.sort_unstable();
        blue.sort_unstable();
        Ok(Partition { red, blue })
    }

    /// `true` bits go to `B`.
    pub fn from_bits(bits: &[bool]) -> Self {
        let (blue, red): (Vec<usize>, Vec<usize>) = (0..bits.len()).partition(|&v| bits[v]);
        Partition { red, blue }
    }
}

/// Number of `B`-equidistance classes inside `R`.
pub fn count_partition_classes(
    dist: &DistanceMatrix,
    p: &Partition,
) -> Result<(usize, EquidistancePartition)> {
    let classes = equidistance_classes(dist, &p.blue, &p.red)?;
    Ok((classes.len(), classes))
}

pub fn partition_for_trial(n: usize, seed: u64, trial: u64) -> Partition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut bits = Vec::with_capacity(n);
    let mut word = 0u64;
    for v in 0..n {
        if v % 64 == 0 {
            word = rng.next_u64();
        }
        bits.push(word >> (v % 64) & 1 == 1);
    }
    Partition::from_bits(&bits)
}

/// Representatives of a successful partition, verified co-resolving.
fn witness_from(dist: &DistanceMatrix, p: &Partition, k: usize) -> Result<Option<Vec<usize>>> {
    let (count, classes) = count_partition_classes(dist, p)?;
    if count < k {
        return Ok(None);
    }
    let witness = classes.representatives();
    verify_co_resolving(dist, &witness)?;
    Ok(Some(witness))
}

/// Runs independent random partitions until one succeeds. A yes answer
/// always carries a verified witness; a no answer is wrong with probability
/// at most `(1 - 4^-k)^trials`. Defaults to `4^k` trials.
///
/// When `n < 2k` the instance is decided exactly instead.
pub fn solve_randomized(
    inst: &SavingInstance,
    trials: Option<u64>,
    seed: u64,
) -> Result<SavingAnswer> {
    let k = inst.k;
    let trials = match trials {
        Some(0) => return Err(Error::Precondition("at least one trial is required".into())),
        Some(t) => t,
        None if k > MAX_DEFAULT_TRIAL_K => {
            return Err(Error::TrialsOverflow {
                k,
                max_k: MAX_DEFAULT_TRIAL_K,
            })
        }
        None => 1u64 << (2 * k),
    };
    let dist = DistanceMatrix::new(&inst.graph)?;
    let n = dist.n();
    if n < 2 * k {
        return solve_exact_dual(inst);
    }
    let hit = (0..trials)
        .into_par_iter()
        .map(|i| {
            let p = partition_for_trial(n, seed, i);
            witness_from(&dist, &p, k).map(|w| w.map(|w| (i, w)))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    Ok(match hit {
        Some((i, witness)) => SavingAnswer {
            yes: true,
            witness: Some(witness),
            method: Method::Randomized,
            work: i + 1,
        },
        None => SavingAnswer {
            yes: false,
            witness: None,
            method: Method::Randomized,
            work: trials,
        },
    })
}

/// Tries the partitions of an `(n, 2k)`-universal family (bit 0 → `R`,
/// bit 1 → `B`). Exact in both directions. When `n < 2k` the instance is
/// decided by [`solve_exact_dual`].
pub fn solve_derandomized(inst: &SavingInstance) -> Result<SavingAnswer> {
    let k = inst.k;
    let dist = DistanceMatrix::new(&inst.graph)?;
    let n = dist.n();
    if n < 2 * k {
        return solve_exact_dual(inst);
    }
    let family = universal_family(n, 2 * k)?;
    let hit = family
        .members
        .par_iter()
        .enumerate()
        .map(|(i, bits)| {
            let p = Partition::from_bits(bits);
            witness_from(&dist, &p, k).map(|w| w.map(|w| (i as u64, w)))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    Ok(match hit {
        Some((i, witness)) => SavingAnswer {
            yes: true,
            witness: Some(witness),
            method: Method::Derandomized,
            work: i + 1,
        },
        None => SavingAnswer {
            yes: false,
            witness: None,
            method: Method::Derandomized,
            work: family.len() as u64,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn c4() -> Graph {
        graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    fn p4() -> Graph {
        graph(4, &[(0, 1), (1, 2), (2, 3)])
    }

    #[test]
    fn partition_counts() {
        let d = DistanceMatrix::new(&p4()).unwrap();
        let p = Partition::new(4, &[1, 2, 3], &[0]).unwrap();
        assert_eq!(count_partition_classes(&d, &p).unwrap().0, 3);

        let d = DistanceMatrix::new(&c4()).unwrap();
        let p = Partition::new(4, &[2, 3], &[0, 1]).unwrap();
        assert_eq!(count_partition_classes(&d, &p).unwrap().0, 2);

        let p = Partition::new(4, &[], &[0, 1, 2, 3]).unwrap();
        assert_eq!(count_partition_classes(&d, &p).unwrap().0, 0);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, &[0], &[1]).is_err());
        assert!(Partition::new(3, &[0, 1], &[1, 2]).is_err());
        assert!(Partition::new(2, &[0], &[2]).is_err());
    }

    #[test]
    fn trial_partitions_are_stable() {
        let a = partition_for_trial(100, 7, 3);
        assert_eq!(a, partition_for_trial(100, 7, 3));
        assert_ne!(a, partition_for_trial(100, 7, 4));
        assert_eq!(a.red.len() + a.blue.len(), 100);
    }

    #[test]
    fn randomized_cycle() {
        let inst = SavingInstance::new(c4(), 2);
        let successes = (0..50)
            .filter(|&seed| {
                let a = solve_randomized(&inst, None, seed).unwrap();
                if let Some(w) = &a.witness {
                    assert!(w.len() >= 2);
                }
                a.yes
            })
            .count();
        assert!(successes > 25);
    }

    #[test]
    fn randomized_no_instance() {
        let k2 = graph(2, &[(0, 1)]);
        for seed in 0..20 {
            let a = solve_randomized(&SavingInstance::new(k2.clone(), 2), Some(64), seed).unwrap();
            assert!(!a.yes);
            assert_eq!(a.witness, None);
        }
    }

    #[test]
    fn randomized_single_vertex() {
        let a = solve_randomized(&SavingInstance::trivial_yes(), Some(1), 0).unwrap();
        assert!(a.yes);
    }

    #[test]
    fn randomized_guards() {
        let big = SavingInstance::new(p4(), 16);
        assert_eq!(
            solve_randomized(&big, None, 0),
            Err(Error::TrialsOverflow { k: 16, max_k: 15 })
        );
        assert!(solve_randomized(&SavingInstance::new(p4(), 1), Some(0), 0).is_err());
    }

    #[test]
    fn derandomized_examples() {
        assert!(
            solve_derandomized(&SavingInstance::new(c4(), 2))
                .unwrap()
                .yes
        );
        let a = solve_derandomized(&SavingInstance::new(p4(), 3)).unwrap();
        assert!(a.yes);
        assert!(a.witness.unwrap().len() >= 3);
        let k2 = graph(2, &[(0, 1)]);
        assert!(!solve_derandomized(&SavingInstance::new(k2, 2)).unwrap().yes);
    }
}
