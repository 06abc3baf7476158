//! Plain-text formats.
//!
//! Graph: `#` lines are comments; the first data line is `n m`, followed by
//! exactly `m` lines `u v` (0-based ids, one space). Trailing whitespace and
//! trailing blank lines are tolerated, nothing else is.
//!
//! Hitting set: same comment rules; header `n m l`, then `m` lines of
//! space-separated element ids.
//!
//! Kernel outcomes and reduction outputs are a graph followed by trailer
//! lines (`k=`, `certificate:`, `vc=`, `role`).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reductions::{HittingSetInstance, ReductionOutput, Role};
use crate::saving::KernelOutcome;

/// Data lines with their 1-based line numbers, comments dropped.
struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    consumed: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            consumed: 0,
        }
    }

    /// Next data line, or `None` at the end of the input.
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            self.consumed = i + 1;
            if raw.starts_with('#') {
                continue;
            }
            return Some((i + 1, raw.trim_end()));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.next_line() {
            Some((line, text)) if !text.is_empty() => Ok((line, text)),
            Some((line, _)) => Err(parse_err(
                line,
                format!("expected {what}, found a blank line"),
            )),
            None => Err(parse_err(
                self.consumed + 1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    /// Only blank lines and comments may remain.
    fn finish(&mut self) -> Result<()> {
        while let Some((line, text)) = self.next_line() {
            if !text.is_empty() {
                return Err(parse_err(line, "unexpected trailing content".into()));
            }
        }
        Ok(())
    }
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

/// Splits on single spaces and parses each token as a plain decimal id.
fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split(' ')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(
                    line,
                    format!("expected a non-negative integer, found {tok:?}"),
                ));
            }
            tok.parse()
                .map_err(|_| parse_err(line, format!("integer {tok} is too large")))
        })
        .collect()
}

fn fields<const N: usize>(line: usize, text: &str, what: &str) -> Result<[usize; N]> {
    let values = numbers(line, text)?;
    values.try_into().map_err(|v: Vec<usize>| {
        parse_err(
            line,
            format!("expected {what} ({N} integers), found {} fields", v.len()),
        )
    })
}

fn read_graph(lines: &mut Lines<'_>) -> Result<Graph> {
    let (line, header) = lines.expect("header `n m`")?;
    let [n, m] = fields(line, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.expect("an edge line `u v`")?;
        let [u, v] = fields(line, text, "an edge `u v`")?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(parse_err(line, format!("vertex {vertex} out of range")));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_hitting_set(text: &str) -> Result<HittingSetInstance> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect("header `n m l`")?;
    let [n, m, budget] = fields(line, header, "header `n m l`")?;
    let mut family = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.expect("a set line")?;
        let set = numbers(line, text)?;
        if let Some(&e) = set.iter().find(|&&e| e >= n) {
            return Err(parse_err(line, format!("element {e} out of range")));
        }
        family.push(set);
    }
    lines.finish()?;
    HittingSetInstance::new(n, family, budget)
}

/// Canonical form of a (deduplicated) instance.
pub fn write_hitting_set(inst: &HittingSetInstance) -> String {
    let mut out = format!("{} {} {}\n", inst.universe_size(), inst.m(), inst.budget());
    for set in inst.family() {
        out.push_str(&join_ids(set));
        out.push('\n');
    }
    out
}

/// `0 3 5`
pub fn join_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// `{0, 3, 5}`
pub fn format_set(ids: &[usize]) -> String {
    format!(
        "{{{}}}",
        ids.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

/// Parses `ids` lists such as `0,3,5`, `0 3 5` or `{0, 3, 5}`.
pub fn parse_id_list(text: &str) -> Result<Vec<usize>> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(1, format!("invalid vertex id {t:?}")))
        })
        .collect()
}

/// The kernel graph, `k=<k>`, and for trivial-yes verdicts a
/// `certificate: <ids>` line in the input graph's ids.
pub fn write_kernel(outcome: &KernelOutcome) -> String {
    let mut out = write_graph(&outcome.instance.graph);
    let _ = writeln!(out, "k={}", outcome.instance.k);
    if let Some(cert) = outcome.certificate_original() {
        let _ = writeln!(out, "certificate: {}", join_ids(&cert));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelFile {
    pub graph: Graph,
    pub k: usize,
    pub certificate: Option<Vec<usize>>,
}

pub fn parse_kernel(text: &str) -> Result<KernelFile> {
    let mut lines = Lines::new(text);
    let graph = read_graph(&mut lines)?;
    let (line, k_line) = lines.expect("`k=<int>`")?;
    let k = trailer(line, k_line, "k=")?;
    let certificate = match lines.next_line() {
        Some((line, text)) if !text.is_empty() => {
            let rest = text
                .strip_prefix("certificate:")
                .ok_or_else(|| parse_err(line, "expected `certificate: <ids>`".into()))?;
            Some(numbers(line, rest.trim_start())?)
        }
        _ => None,
    };
    lines.finish()?;
    Ok(KernelFile {
        graph,
        k,
        certificate,
    })
}

fn trailer(line: usize, text: &str, key: &str) -> Result<usize> {
    let value = text
        .strip_prefix(key)
        .ok_or_else(|| parse_err(line, format!("expected `{key}<int>`")))?;
    let [v] = fields(line, value, key)?;
    Ok(v)
}

/// The graph, `k=<k>`, `vc=<ids>`, then `role <id> <tag>` per vertex.
pub fn write_reduction(out: &ReductionOutput) -> String {
    let mut s = write_graph(&out.graph);
    let _ = writeln!(s, "k={}", out.k);
    let _ = writeln!(s, "vc={}", join_ids(&out.vertex_cover));
    for (v, role) in out.roles.iter().enumerate() {
        let _ = writeln!(s, "role {v} {}", role.tag());
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionFile {
    pub graph: Graph,
    pub k: usize,
    pub vertex_cover: Vec<usize>,
    pub roles: Vec<Role>,
}

pub fn parse_reduction(text: &str) -> Result<ReductionFile> {
    let mut lines = Lines::new(text);
    let graph = read_graph(&mut lines)?;
    let (line, k_line) = lines.expect("`k=<int>`")?;
    let k = trailer(line, k_line, "k=")?;
    let (line, vc_line) = lines.expect("`vc=<ids>`")?;
    let ids = vc_line
        .strip_prefix("vc=")
        .ok_or_else(|| parse_err(line, "expected `vc=<ids>`".into()))?;
    let vertex_cover = if ids.is_empty() {
        Vec::new()
    } else {
        numbers(line, ids)?
    };
    let mut roles = Vec::with_capacity(graph.n());
    for v in 0..graph.n() {
        let (line, text) = lines.expect("a `role <id> <tag>` line")?;
        let mut parts = text.split(' ');
        let (Some("role"), Some(id), Some(tag), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(parse_err(line, "expected `role <id> <tag>`".into()));
        };
        if id != v.to_string() {
            return Err(parse_err(line, format!("expected role for vertex {v}")));
        }
        let role =
            Role::from_tag(tag).ok_or_else(|| parse_err(line, format!("unknown role {tag:?}")))?;
        roles.push(role);
    }
    lines.finish()?;
    Ok(ReductionFile {
        graph,
        k,
        vertex_cover,
        roles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::reduce_to_metric_dimension;
    use crate::saving::{kernelize, SavingInstance};

    #[test]
    fn path_and_single_vertex() {
        let g = parse_graph("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert_eq!(parse_graph("1 0\n").unwrap().n(), 1);
    }

    #[test]
    fn out_of_range_message() {
        let e = parse_graph("2 1\n0 2\n").unwrap_err();
        assert_eq!(e.to_string(), "vertex 2 out of range (line 2)");
    }

    #[test]
    fn comments_and_whitespace() {
        let g = parse_graph("# a path\n3 2\n0 1  \n# middle\n1 2\t\n\n\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(parse_graph("# c\n2 1\n0 1\n").unwrap().m(), 1);
    }

    #[test]
    fn rejects_malformed() {
        let cases = [
            ("", 1),
            ("3\n", 1),
            ("3 1\n0  1\n", 2),
            ("3 2\n0 1\n", 3),
            ("3 1\n0 1\n1 2\n", 3),
            ("3 1\n1 1\n", 2),
            ("3 1\n-1 2\n", 2),
            ("3 1\n\n0 1\n", 2),
            (" 3 1\n0 1\n", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_round_trip() {
        let text = "5 4\n0 1\n0 4\n1 2\n3 4\n";
        assert_eq!(write_graph(&parse_graph(text).unwrap()), text);
    }

    #[test]
    fn writer_sorts_edges() {
        let g = parse_graph("3 2\n2 1\n1 0\n").unwrap();
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn hitting_set_files() {
        let inst = parse_hitting_set("# two singletons\n2 2 1\n0\n1\n").unwrap();
        assert_eq!(inst.family(), &[vec![0], vec![1]]);
        assert_eq!(inst.budget(), 1);
        assert_eq!(write_hitting_set(&inst), "2 2 1\n0\n1\n");
        assert!(parse_hitting_set("2 1 1\n0 2\n").is_err());
        assert!(parse_hitting_set("2 2 1\n0\n").is_err());
        assert!(matches!(
            parse_hitting_set("2 1 1\n\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn id_lists() {
        assert_eq!(parse_id_list("0,3,5").unwrap(), vec![0, 3, 5]);
        assert_eq!(parse_id_list("{0, 3}").unwrap(), vec![0, 3]);
        assert_eq!(parse_id_list("").unwrap(), Vec::<usize>::new());
        assert!(parse_id_list("0,x").is_err());
        assert_eq!(format_set(&[0]), "{0}");
        assert_eq!(format_set(&[1, 2]), "{1, 2}");
    }

    #[test]
    fn kernel_round_trip() {
        let p8 = Graph::new(8, &(0..7).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let outcome = kernelize(&SavingInstance::new(p8, 1)).unwrap();
        let text = write_kernel(&outcome);
        assert_eq!(text, "1 0\nk=1\ncertificate: 0\n");
        let back = parse_kernel(&text).unwrap();
        assert_eq!(back.certificate, Some(vec![0]));
        assert_eq!(back.k, 1);
    }

    #[test]
    fn reduction_round_trip() {
        let inst = HittingSetInstance::new(2, vec![vec![0], vec![1]], 2).unwrap();
        let out = reduce_to_metric_dimension(&inst).unwrap();
        let text = write_reduction(&out);
        assert!(text.contains("\nk=9\nvc=0 1 6 7"));
        assert!(text.ends_with("role 19 a'_F\n"));
        let back = parse_reduction(&text).unwrap();
        assert_eq!(back.graph, out.graph);
        assert_eq!(back.vertex_cover, out.vertex_cover);
        assert_eq!(back.roles, out.roles);
        assert_eq!(back.k, 9);
    }
}
