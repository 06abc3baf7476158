//! Polynomial parameter transformation from Hitting Set (parameterized by
//! universe size plus budget) to Metric Dimension parameterized by vertex
//! cover plus solution size, with an exact cross-check on small instances.
//!
//! The parameter of the output is `|X| + k = 3t_n + 3t_m + n + ℓ + 9`, where
//! `t_n = 2⌈log₂ n⌉` and `t_m = 2⌈log₂ m⌉` are the code lengths used for the
//! elements and the sets.

mod construction;
mod hitting_set;

pub use construction::{
    balanced_codes, code_length, reduce_to_metric_dimension, reduce_with_wiring, ApexWiring,
    ReductionOutput, Role,
};
pub use hitting_set::{hitting_set_exact, HittingSetInstance};

use crate::error::{Error, Result};
use crate::resolving::has_resolving_set_of_size;

/// Largest universe and family sizes `verify_reduction` accepts.
pub const VERIFY_MAX_N: usize = 3;
pub const VERIFY_MAX_M: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    pub hs_yes: bool,
    pub md_yes: bool,
    pub agree: bool,
    pub hitting_set: Option<Vec<usize>>,
    pub resolving_set: Option<Vec<usize>>,
    pub output: ReductionOutput,
}

/// Solves both sides exactly and compares the answers.
pub fn verify_reduction(inst: &HittingSetInstance) -> Result<ReductionCheck> {
    let (n, m) = (inst.universe_size(), inst.m());
    if n > VERIFY_MAX_N || m > VERIFY_MAX_M {
        return Err(Error::BudgetExceeded {
            n,
            m,
            max_n: VERIFY_MAX_N,
            max_m: VERIFY_MAX_M,
        });
    }
    let output = reduce_to_metric_dimension(inst)?;
    let hitting_set = hitting_set_exact(inst);
    let resolving_set = has_resolving_set_of_size(&output.graph, output.k)?;
    let (hs_yes, md_yes) = (hitting_set.is_some(), resolving_set.is_some());
    Ok(ReductionCheck {
        hs_yes,
        md_yes,
        agree: hs_yes == md_yes,
        hitting_set,
        resolving_set,
        output,
    })
}
