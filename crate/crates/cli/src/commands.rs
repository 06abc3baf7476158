use std::fs;
use std::io::Read as _;
use std::path::Path;
use std::time::Duration;

use md_core::format::{
    format_set, parse_graph, parse_hitting_set, parse_id_list, write_graph, write_kernel,
    write_reduction,
};
use md_core::graph::{prune, twin_classes, TwinKind};
use md_core::reductions::{reduce_to_metric_dimension, verify_reduction, HittingSetInstance};
use md_core::resolving::{complement, is_resolving, Engine, ResolvingSearch};
use md_core::saving::{
    kernel_size_bound, kernelize, solve_derandomized, solve_exact_dual, solve_randomized,
    SavingAnswer, SavingInstance,
};
use md_core::{DistanceMatrix, Graph};
use serde_json::json;

use crate::report::Report;
use crate::{
    bench, sweep, Cli, Command, EngineArg, MethodArg, OutArg, SavingCommand, Status, VerifyCommand,
};

pub type CliResult<T> = Result<T, String>;

/// A report, or a file-format artifact with the report that describes it.
pub enum Output {
    Report(Report),
    Artifact { text: String, report: Report },
}

impl Output {
    /// Artifacts print as-is; under `--json` they are embedded in the report.
    pub fn render(self, as_json: bool, elapsed: Option<Duration>) -> String {
        let stamp = |r: &mut Report| {
            if let Some(t) = elapsed {
                r.text("time_ms", format!("{:.3}", t.as_secs_f64() * 1e3));
            }
        };
        match self {
            Output::Report(mut r) => {
                stamp(&mut r);
                r.render(as_json)
            }
            Output::Artifact { text, mut report } if as_json => {
                report.text("artifact", text);
                stamp(&mut report);
                report.render(true)
            }
            Output::Artifact { text, .. } => {
                if let Some(t) = elapsed {
                    eprintln!("time_ms: {:.3}", t.as_secs_f64() * 1e3);
                }
                text
            }
        }
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("<stdin>: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    parse_graph(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_hitting_set(path: &Path) -> CliResult<HittingSetInstance> {
    parse_hitting_set(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn err(e: md_core::Error) -> String {
    e.to_string()
}

/// Writes the artifact to `--out` and returns the report, or returns both.
fn emit(text: String, mut report: Report, out: &OutArg) -> CliResult<Output> {
    match &out.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            report.text("written", path.display().to_string());
            Ok(Output::Report(report))
        }
        None => Ok(Output::Artifact { text, report }),
    }
}

fn graph_summary(r: &mut Report, g: &Graph) {
    r.int("n", g.n() as u64).int("m", g.m() as u64);
}

/// Independent check of a co-resolving witness before it is reported.
fn check_co_resolving(dist: &DistanceMatrix, witness: &[usize], k: usize) -> CliResult<()> {
    let rest = complement(dist.n(), witness);
    if witness.len() < k || !is_resolving(dist, &rest).map_err(err)?.resolved {
        return Err(format!(
            "internal error: witness {} failed verification",
            format_set(witness)
        ));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> CliResult<(Status, Output)> {
    match &cli.command {
        Command::Solve { graph, engine } => solve(graph, *engine),
        Command::Check { graph, set } => check(graph, set),
        Command::Twins { graph } => twins(graph),
        Command::Prune { graph, out } => prune_cmd(graph, out),
        Command::Saving(SavingCommand::Solve {
            k,
            method,
            trials,
            graph,
        }) => saving_solve(graph, *k, *method, *trials, cli.seed),
        Command::Saving(SavingCommand::Kernel { k, graph, out }) => saving_kernel(graph, *k, out),
        Command::Reduce { hitting_set, out } => reduce(hitting_set, out),
        Command::Verify(VerifyCommand::Reduction { hitting_set }) => verify(hitting_set),
        Command::Verify(VerifyCommand::Sweep {
            max_n,
            max_k,
            samples,
        }) => sweep::run(*max_n, *max_k, *samples, cli.seed).map(|(s, r)| (s, Output::Report(r))),
        Command::Bench { suite } => Ok((Status::Yes, Output::Report(bench::run(*suite)))),
    }
}

fn solve(path: &Path, engine: EngineArg) -> CliResult<(Status, Output)> {
    let g = load_graph(path)?;
    let search = ResolvingSearch::new(&g).map_err(err)?;
    let engine = match engine {
        EngineArg::Bb => Engine::BranchAndBound,
        EngineArg::Naive => Engine::Naive,
    };
    let result = search.minimum(engine);
    if !is_resolving(search.distances(), &result.witness)
        .map_err(err)?
        .resolved
    {
        return Err("internal error: witness is not resolving".into());
    }
    let mut r = Report::new();
    graph_summary(&mut r, &g);
    r.int("md", result.md as u64)
        .set("witness", &result.witness)
        .text(
            "engine",
            match engine {
                Engine::BranchAndBound => "branch-and-bound",
                Engine::Naive => "naive",
            },
        )
        .int("nodes", result.nodes);
    Ok((Status::Yes, Output::Report(r)))
}

fn check(path: &Path, set: &str) -> CliResult<(Status, Output)> {
    let g = load_graph(path)?;
    let mut ids = parse_id_list(set).map_err(|e| format!("--set: {e}"))?;
    ids.sort_unstable();
    ids.dedup();
    let dist = DistanceMatrix::new(&g).map_err(err)?;
    let c = is_resolving(&dist, &ids).map_err(err)?;
    let mut r = Report::new();
    graph_summary(&mut r, &g);
    r.set("set", &ids).flag("resolved", c.resolved).maybe_set(
        "unresolved_pair",
        c.unresolved_pair.map(|(u, v)| vec![u, v]).as_deref(),
    );
    Ok((
        if c.resolved { Status::Yes } else { Status::No },
        Output::Report(r),
    ))
}

fn kind_name(kind: TwinKind) -> &'static str {
    match kind {
        TwinKind::True => "true",
        TwinKind::False => "false",
        TwinKind::Singleton => "singleton",
    }
}

fn twins(path: &Path) -> CliResult<(Status, Output)> {
    let g = load_graph(path)?;
    let classes = twin_classes(&g);
    let mut r = Report::new();
    graph_summary(&mut r, &g);
    r.int("classes", classes.len() as u64);
    let rows = classes
        .iter()
        .map(|c| {
            let kind = kind_name(c.kind);
            (
                format!("{kind} {}", format_set(&c.vertices)),
                json!({"kind": kind, "vertices": c.vertices}),
            )
        })
        .collect();
    r.rows("class", rows);
    Ok((Status::Yes, Output::Report(r)))
}

fn prune_cmd(path: &Path, out: &OutArg) -> CliResult<(Status, Output)> {
    let g = load_graph(path)?;
    let p = prune(&g);
    let mut r = Report::new();
    graph_summary(&mut r, &g);
    r.int("pruned_n", p.pruned.n() as u64)
        .int("pruned_m", p.pruned.m() as u64)
        .int("removed", p.removed as u64)
        .set("kept", &p.kept_map);
    Ok((Status::Yes, emit(write_graph(&p.pruned), r, out)?))
}

fn saving_solve(
    path: &Path,
    k: usize,
    method: MethodArg,
    trials: Option<u64>,
    seed: u64,
) -> CliResult<(Status, Output)> {
    let g = load_graph(path)?;
    let dist = DistanceMatrix::new(&g).map_err(err)?;
    let inst = SavingInstance::new(g.clone(), k);
    let answer: SavingAnswer = match method {
        MethodArg::Exact => solve_exact_dual(&inst),
        MethodArg::Randomized => solve_randomized(&inst, trials, seed),
        MethodArg::Derandomized => solve_derandomized(&inst),
    }
    .map_err(err)?;
    if let Some(w) = &answer.witness {
        check_co_resolving(&dist, w, k)?;
    }
    let mut r = Report::new();
    graph_summary(&mut r, &g);
    r.int("k", k as u64).text("method", answer.method.as_str());
    if matches!(method, MethodArg::Randomized) {
        r.int("seed", seed);
    }
    r.flag("answer", answer.yes)
        .maybe_set("witness", answer.witness.as_deref())
        .int("work", answer.work);
    Ok((
        if answer.yes { Status::Yes } else { Status::No },
        Output::Report(r),
    ))
}

fn saving_kernel(path: &Path, k: usize, out: &OutArg) -> CliResult<(Status, Output)> {
    let g = load_graph(path)?;
    let outcome = kernelize(&SavingInstance::new(g.clone(), k)).map_err(err)?;
    let certificate = outcome.certificate_original();
    if let Some(c) = &certificate {
        check_co_resolving(&DistanceMatrix::new(&g).map_err(err)?, c, k)?;
    }
    let mut r = Report::new();
    graph_summary(&mut r, &g);
    r.int("k", k as u64)
        .text("verdict", outcome.verdict.as_str())
        .int("removed", outcome.prune.removed as u64)
        .int("pruned_n", outcome.prune.pruned.n() as u64)
        .int("aux_max_degree", outcome.aux_max_degree as u64)
        .int("kernel_n", outcome.instance.graph.n() as u64)
        .int("kernel_k", outcome.instance.k as u64)
        .int("size_bound", kernel_size_bound(k))
        .maybe_set("certificate", certificate.as_deref());
    Ok((Status::Yes, emit(write_kernel(&outcome), r, out)?))
}

fn reduce(path: &Path, out: &OutArg) -> CliResult<(Status, Output)> {
    let inst = load_hitting_set(path)?;
    let red = reduce_to_metric_dimension(&inst).map_err(err)?;
    let mut r = Report::new();
    r.int("universe", inst.universe_size() as u64)
        .int("sets", inst.m() as u64)
        .int("budget", inst.budget() as u64)
        .int("t_n", red.t_n as u64)
        .int("t_m", red.t_m as u64)
        .int("vertices", red.graph.n() as u64)
        .int("edges", red.graph.m() as u64)
        .int("vertex_cover", red.vertex_cover.len() as u64)
        .int("k", red.k as u64)
        .int("parameter", (red.vertex_cover.len() + red.k) as u64);
    Ok((Status::Yes, emit(write_reduction(&red), r, out)?))
}

fn verify(path: &Path) -> CliResult<(Status, Output)> {
    let inst = load_hitting_set(path)?;
    let c = verify_reduction(&inst).map_err(err)?;
    let mut r = Report::new();
    r.int("universe", inst.universe_size() as u64)
        .int("sets", inst.m() as u64)
        .int("budget", inst.budget() as u64)
        .int("vertices", c.output.graph.n() as u64)
        .int("k", c.output.k as u64)
        .flag("hs_yes", c.hs_yes)
        .flag("md_yes", c.md_yes)
        .flag("agree", c.agree)
        .maybe_set("hitting_set", c.hitting_set.as_deref())
        .maybe_set("resolving_set", c.resolving_set.as_deref());
    Ok((
        if c.agree { Status::Yes } else { Status::No },
        Output::Report(r),
    ))
}
