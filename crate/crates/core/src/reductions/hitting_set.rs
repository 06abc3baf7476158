use itertools::Itertools;

use crate::error::{Error, Result};

/// Universe `0..n`, a family of nonempty subsets, and a budget `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    n: usize,
    family: Vec<Vec<usize>>,
    budget: usize,
}

impl HittingSetInstance {
    /// Sorts each set and drops repeated elements and repeated sets (first
    /// occurrence kept). Empty sets, out-of-range elements and empty
    /// families are rejected.
    pub fn new(n: usize, family: Vec<Vec<usize>>, budget: usize) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::InvalidHittingSet(
                "family must contain at least one set".into(),
            ));
        }
        let mut sets: Vec<Vec<usize>> = Vec::with_capacity(family.len());
        for (i, mut set) in family.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidHittingSet(format!("set {i} is empty")));
            }
            if let Some(&e) = set.iter().find(|&&e| e >= n) {
                return Err(Error::InvalidHittingSet(format!(
                    "set {i} contains element {e} outside universe 0..{n}"
                )));
            }
            set.sort_unstable();
            set.dedup();
            if !sets.contains(&set) {
                sets.push(set);
            }
        }
        Ok(HittingSetInstance {
            n,
            family: sets,
            budget,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    /// Number of distinct sets.
    pub fn m(&self) -> usize {
        self.family.len()
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn with_budget(&self, budget: usize) -> Self {
        HittingSetInstance {
            budget,
            ..self.clone()
        }
    }

    pub fn is_hitting_set(&self, set: &[usize]) -> bool {
        self.family
            .iter()
            .all(|r| r.iter().any(|e| set.contains(e)))
    }
}

/// A hitting set of size at most `ℓ`, if any.
///
/// Elements of singleton sets are forced. The rest is searched by subsets
/// of the elements still needed, by increasing size and then
/// lexicographically, so the result is deterministic.
pub fn hitting_set_exact(inst: &HittingSetInstance) -> Option<Vec<usize>> {
    let mut forced: Vec<usize> = inst
        .family
        .iter()
        .filter(|r| r.len() == 1)
        .map(|r| r[0])
        .collect();
    forced.sort_unstable();
    forced.dedup();
    if forced.len() > inst.budget {
        return None;
    }
    let open: Vec<&Vec<usize>> = inst
        .family
        .iter()
        .filter(|r| !r.iter().any(|e| forced.contains(e)))
        .collect();
    let candidates: Vec<usize> = open
        .iter()
        .flat_map(|r| r.iter().copied())
        .sorted()
        .dedup()
        .collect();
    let spare = inst.budget - forced.len();
    for size in 0..=spare.min(candidates.len()) {
        for pick in candidates.iter().copied().combinations(size) {
            if open.iter().all(|r| r.iter().any(|e| pick.contains(e))) {
                let mut set = forced.clone();
                set.extend(pick);
                set.sort_unstable();
                return Some(set);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, family: &[&[usize]], budget: usize) -> HittingSetInstance {
        HittingSetInstance::new(n, family.iter().map(|s| s.to_vec()).collect(), budget).unwrap()
    }

    /// Every subset of the universe, smallest first.
    fn brute(inst: &HittingSetInstance) -> Option<usize> {
        (0u32..1 << inst.universe_size())
            .filter(|mask| {
                let set: Vec<usize> = (0..inst.universe_size())
                    .filter(|&e| mask >> e & 1 == 1)
                    .collect();
                inst.is_hitting_set(&set)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
    }

    #[test]
    fn two_singletons() {
        assert_eq!(
            hitting_set_exact(&inst(2, &[&[0], &[1]], 2)),
            Some(vec![0, 1])
        );
        assert_eq!(hitting_set_exact(&inst(2, &[&[0], &[1]], 1)), None);
    }

    #[test]
    fn shared_element() {
        assert_eq!(
            hitting_set_exact(&inst(3, &[&[0, 1], &[1, 2]], 1)),
            Some(vec![1])
        );
    }

    #[test]
    fn whole_universe() {
        assert_eq!(hitting_set_exact(&inst(3, &[&[0, 1, 2]], 0)), None);
        let hit = hitting_set_exact(&inst(3, &[&[0, 1, 2]], 1)).unwrap();
        assert_eq!(hit.len(), 1);
    }

    #[test]
    fn dedup_on_ingestion() {
        let i = inst(2, &[&[0, 1], &[1, 0], &[0, 0]], 1);
        assert_eq!(i.family(), &[vec![0, 1], vec![0]]);
        assert_eq!(i.m(), 2);
    }

    #[test]
    fn invalid_instances() {
        assert!(HittingSetInstance::new(2, vec![], 1).is_err());
        assert!(HittingSetInstance::new(2, vec![vec![]], 1).is_err());
        assert!(HittingSetInstance::new(2, vec![vec![2]], 1).is_err());
    }

    #[test]
    fn matches_brute_force_on_all_small_families() {
        // all families of distinct nonempty subsets of {0,1,2} with up to 3 sets
        let subsets: Vec<Vec<usize>> = (1u32..8)
            .map(|m| (0..3).filter(|&e| m >> e & 1 == 1).collect())
            .collect();
        for size in 1..=3 {
            for family in subsets.iter().cloned().combinations(size) {
                for budget in 0..=3 {
                    let i = HittingSetInstance::new(3, family.clone(), budget).unwrap();
                    let found = hitting_set_exact(&i);
                    let best = brute(&i).unwrap();
                    assert_eq!(found.is_some(), best <= budget, "{family:?} l={budget}");
                    if let Some(h) = found {
                        assert!(i.is_hitting_set(&h));
                        assert!(h.len() <= budget);
                    }
                }
            }
        }
    }
}
