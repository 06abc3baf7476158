use md_core::generators::{all_connected, random_connected};
use md_core::resolving::{complement, is_resolving};
use md_core::saving::{
    kernel_size_bound, kernelize, solve_derandomized, solve_exact_dual, SavingInstance, Verdict,
};
use md_core::{DistanceMatrix, Graph};
use rayon::prelude::*;

use crate::commands::CliResult;
use crate::report::Report;
use crate::Status;

/// Largest graph order the sweep accepts.
pub const MAX_N: usize = 7;

/// All connected graphs up to order 5, then `samples` random connected
/// graphs for each order 6 and 7, stopping at `max_n`.
pub fn population(max_n: usize, samples: usize, seed: u64) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=max_n.min(5)).flat_map(all_connected).collect();
    for n in 6..=max_n {
        graphs.extend(random_connected(n, samples, seed.wrapping_add(n as u64)));
    }
    graphs
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    instances: u64,
    yes: u64,
    reduced: u64,
    trivial_yes: u64,
    kernel_mismatches: u64,
    oversized_kernels: u64,
    bad_certificates: u64,
    derandomized_mismatches: u64,
    max_kernel_n: usize,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.yes += o.yes;
        self.reduced += o.reduced;
        self.trivial_yes += o.trivial_yes;
        self.kernel_mismatches += o.kernel_mismatches;
        self.oversized_kernels += o.oversized_kernels;
        self.bad_certificates += o.bad_certificates;
        self.derandomized_mismatches += o.derandomized_mismatches;
        self.max_kernel_n = self.max_kernel_n.max(o.max_kernel_n);
        self
    }

    fn failures(&self) -> u64 {
        self.kernel_mismatches
            + self.oversized_kernels
            + self.bad_certificates
            + self.derandomized_mismatches
    }
}

fn check_one(g: &Graph, k: usize) -> md_core::Result<Tally> {
    let inst = SavingInstance::new(g.clone(), k);
    let truth = solve_exact_dual(&inst)?.yes;
    let mut t = Tally {
        instances: 1,
        yes: u64::from(truth),
        ..Tally::default()
    };
    let out = kernelize(&inst)?;
    match out.verdict {
        Verdict::Reduced => {
            t.reduced = 1;
            t.max_kernel_n = out.instance.graph.n();
            if out.instance.graph.n() as u128 >= kernel_size_bound(k) {
                t.oversized_kernels = 1;
            }
            if solve_exact_dual(&out.instance)?.yes != truth {
                t.kernel_mismatches = 1;
            }
        }
        Verdict::TrivialYes => {
            t.trivial_yes = 1;
            let cert = out.certificate_original().unwrap_or_default();
            let dist = DistanceMatrix::new(g)?;
            let ok = cert.len() >= k && is_resolving(&dist, &complement(g.n(), &cert))?.resolved;
            t.bad_certificates = u64::from(!ok);
            t.kernel_mismatches = u64::from(!truth);
        }
    }
    if solve_derandomized(&inst)?.yes != truth {
        t.derandomized_mismatches = 1;
    }
    Ok(t)
}

pub fn run(max_n: usize, max_k: usize, samples: usize, seed: u64) -> CliResult<(Status, Report)> {
    if max_n == 0 || max_n > MAX_N {
        return Err(format!("--max-n must be between 1 and {MAX_N}"));
    }
    if max_k == 0 {
        return Err("--max-k must be at least 1".into());
    }
    let graphs = population(max_n, samples, seed);
    let tasks: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| (1..=max_k).map(move |k| (i, k)))
        .collect();
    let tally = tasks
        .par_iter()
        .map(|&(i, k)| check_one(&graphs[i], k))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
        .map_err(|e| e.to_string())?;

    let mut r = Report::new();
    r.int("max_n", max_n as u64)
        .int("max_k", max_k as u64)
        .int("seed", seed)
        .int("graphs", graphs.len() as u64)
        .int("instances", tally.instances)
        .int("yes_instances", tally.yes)
        .int("reduced", tally.reduced)
        .int("trivial_yes", tally.trivial_yes)
        .int("max_kernel_n", tally.max_kernel_n as u64)
        .int("kernel_mismatches", tally.kernel_mismatches)
        .int("oversized_kernels", tally.oversized_kernels)
        .int("bad_certificates", tally.bad_certificates)
        .int("derandomized_mismatches", tally.derandomized_mismatches);
    let pass = tally.failures() == 0;
    r.flag("pass", pass);
    Ok((if pass { Status::Yes } else { Status::No }, r))
}
