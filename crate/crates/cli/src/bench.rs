use std::time::Instant;

use clap::ValueEnum;
use md_core::generators::{complete, cycle, hypercube, path, petersen};
use md_core::reductions::{verify_reduction, HittingSetInstance};
use md_core::resolving::metric_dimension_exact;
use md_core::saving::{kernelize, solve_derandomized, solve_randomized, SavingInstance};
use md_core::Graph;
use rayon::prelude::*;
use serde_json::json;

use crate::report::Report;
use crate::sweep::population;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Exact metric dimension on named graphs and the small population.
    Exact,
    /// Kernelization at k = 1, 2, 3.
    Kernel,
    /// Derandomized solver at k = 1, 2, 3.
    Derandomized,
    /// Randomized solver with 4^k trials at k = 1, 2, 3.
    Randomized,
    /// Hitting-set reduction cross-check for n = m = 2.
    Reduction,
    All,
}

fn named() -> Vec<Graph> {
    let mut g: Vec<Graph> = (2..=9).map(path).collect();
    g.extend((3..=9).map(cycle));
    g.extend((2..=6).map(complete));
    g.push(petersen());
    g.push(hypercube(3));
    g
}

fn two_by_two() -> Vec<HittingSetInstance> {
    let subsets = [vec![0], vec![1], vec![0, 1]];
    let mut out = Vec::new();
    for a in &subsets {
        for b in &subsets {
            if a != b {
                for l in 0..=2 {
                    out.push(HittingSetInstance::new(2, vec![a.clone(), b.clone()], l).unwrap());
                }
            }
        }
    }
    out
}

/// Runs `f` on every item in parallel; returns (count, milliseconds).
fn time<T: Sync>(items: &[T], f: impl Fn(&T) + Sync + Send) -> (usize, f64) {
    let start = Instant::now();
    items.par_iter().for_each(f);
    (items.len(), start.elapsed().as_secs_f64() * 1e3)
}

pub fn run(suite: Suite) -> Report {
    let graphs = population(7, 500, 0);
    let with_k: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| (1..=3).map(move |k| (g, k)))
        .collect();
    let mut rows = Vec::new();
    let wanted = |s: Suite| suite == s || suite == Suite::All;

    let mut add = |name: &str, (count, ms): (usize, f64)| {
        rows.push((
            format!("{name} instances={count} ms={ms:.1}"),
            json!({"suite": name, "instances": count, "ms": (ms * 10.0).round() / 10.0}),
        ));
    };
    if wanted(Suite::Exact) {
        add(
            "exact-named",
            time(&named(), |g| drop(metric_dimension_exact(g).unwrap())),
        );
        add(
            "exact-population",
            time(&graphs, |g| drop(metric_dimension_exact(g).unwrap())),
        );
    }
    if wanted(Suite::Kernel) {
        add(
            "kernel",
            time(&with_k, |&(g, k)| {
                drop(kernelize(&SavingInstance::new(g.clone(), k)).unwrap())
            }),
        );
    }
    if wanted(Suite::Derandomized) {
        add(
            "derandomized",
            time(&with_k, |&(g, k)| {
                drop(solve_derandomized(&SavingInstance::new(g.clone(), k)).unwrap())
            }),
        );
    }
    if wanted(Suite::Randomized) {
        add(
            "randomized",
            time(&with_k, |&(g, k)| {
                drop(solve_randomized(&SavingInstance::new(g.clone(), k), None, 0).unwrap())
            }),
        );
    }
    if wanted(Suite::Reduction) {
        add(
            "reduction-2x2",
            time(&two_by_two(), |i| drop(verify_reduction(i).unwrap())),
        );
    }

    let mut r = Report::new();
    r.text("suite", format!("{suite:?}").to_lowercase())
        .rows("row", rows);
    r
}
