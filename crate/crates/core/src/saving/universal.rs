//! `(n, t)`-universal families: binary strings of length `n` that show every
//! pattern in `{0,1}^t` on every `t` positions.
//!
//! Small ground sets (`n <= t + 4`) use all `2^n` strings. Otherwise members
//! are built greedily by the method of conditional expectations: each string
//! is fixed bit by bit, choosing the value that maximises the expected number
//! of still-uncovered `(positions, pattern)` constraints a uniformly random
//! completion would cover. Every member then covers at least a `2^-t`
//! fraction of what is left, so the family has at most
//! `2^t · ln(C(n,t) · 2^t) + 1` members. No randomness is involved.

use itertools::Itertools;

use crate::error::{Error, Result};

/// Upper bound on `C(n, t) · 2^t` (or `2^n` for full enumeration).
pub const GREEDY_CONSTRAINT_LIMIT: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalFamily {
    pub n: usize,
    pub t: usize,
    pub members: Vec<Vec<bool>>,
}

impl UniversalFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// First `(positions, pattern)` no member realises, if any. Pattern bit
    /// `i` is the required value at `positions[i]`.
    pub fn first_uncovered(&self) -> Option<(Vec<usize>, u64)> {
        for positions in (0..self.n).combinations(self.t) {
            let mut seen = vec![false; 1 << self.t];
            for m in &self.members {
                seen[pattern_of(m, &positions)] = true;
            }
            if let Some(p) = seen.iter().position(|&s| !s) {
                return Some((positions, p as u64));
            }
        }
        None
    }
}

fn pattern_of(member: &[bool], positions: &[usize]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &p)| acc | (usize::from(member[p]) << i))
}

fn binomial(n: usize, t: usize) -> u128 {
    (0..t as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

pub fn universal_family(n: usize, t: usize) -> Result<UniversalFamily> {
    if t > n {
        return Err(Error::StrengthTooLarge { t, n });
    }
    if t == 0 {
        return Ok(UniversalFamily {
            n,
            t,
            members: vec![vec![false; n]],
        });
    }
    let too_large = |constraints: u128| Error::FamilyTooLarge {
        n,
        t,
        constraints,
        limit: GREEDY_CONSTRAINT_LIMIT,
    };
    if n <= t + 4 {
        let size = 1u128.checked_shl(n as u32).unwrap_or(u128::MAX);
        if size > GREEDY_CONSTRAINT_LIMIT {
            return Err(too_large(size));
        }
        let members = (0..1usize << n)
            .map(|x| (0..n).map(|v| x >> v & 1 == 1).collect())
            .collect();
        return Ok(UniversalFamily { n, t, members });
    }
    let constraints = binomial(n, t).saturating_mul(1 << t);
    if t >= 64 || constraints > GREEDY_CONSTRAINT_LIMIT {
        return Err(too_large(constraints));
    }
    Ok(UniversalFamily {
        n,
        t,
        members: greedy(n, t),
    })
}

fn greedy(n: usize, t: usize) -> Vec<Vec<bool>> {
    let combos: Vec<Vec<usize>> = (0..n).combinations(t).collect();
    let patterns = 1usize << t;
    let mut uncovered = vec![vec![true; patterns]; combos.len()];
    let mut remaining = combos.len() * patterns;
    // (combo, index of the position inside the combo), per position
    let mut at_position: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (c, combo) in combos.iter().enumerate() {
        for (i, &p) in combo.iter().enumerate() {
            at_position[p].push((c, i));
        }
    }

    let mut members = Vec::new();
    while remaining > 0 {
        let mut bits = vec![false; n];
        for j in 0..n {
            // Scaled by 2^(t-1): an alive pattern whose i-th bit is decided at
            // j is covered by a random completion with probability 2^(i+1-t).
            let mut weight = [0u128; 2];
            for &(c, i) in &at_position[j] {
                let prefix = pattern_of(&bits, &combos[c][..i]);
                for (b, w) in weight.iter_mut().enumerate() {
                    let low = prefix | (b << i);
                    let alive = (0..1usize << (t - i - 1))
                        .filter(|high| uncovered[c][low | (high << (i + 1))])
                        .count();
                    *w += (alive as u128) << i;
                }
            }
            bits[j] = weight[1] > weight[0];
        }
        let mut gained = 0;
        for (c, combo) in combos.iter().enumerate() {
            let p = pattern_of(&bits, combo);
            if uncovered[c][p] {
                uncovered[c][p] = false;
                gained += 1;
            }
        }
        assert!(gained > 0, "conditional expectation guarantees progress");
        remaining -= gained;
        members.push(bits);
    }
    members
}
