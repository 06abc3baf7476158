use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn md(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_md"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_reports_metric_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let o = md(&["solve", s(&p4)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("md: 1\n"));
    assert!(text.contains("witness: {0}\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1\n");
    let bad = write(dir.path(), "bad.txt", "2 1\n0 2\n");
    let split = write(dir.path(), "split.txt", "2 0\n");

    assert_eq!(md(&["check", s(&c4), "--set", "0"]).status.code(), Some(1));
    assert_eq!(
        md(&["check", s(&c4), "--set", "0,1"]).status.code(),
        Some(0)
    );
    assert_eq!(
        md(&["saving", "solve", "-k", "2", s(&k2)]).status.code(),
        Some(1)
    );
    assert_eq!(
        md(&["saving", "solve", "-k", "2", s(&c4)]).status.code(),
        Some(0)
    );

    let o = md(&["solve", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex 2 out of range (line 2)"));

    assert_eq!(md(&["solve", s(&split)]).status.code(), Some(2));
    assert_eq!(md(&["solve"]).status.code(), Some(2));
    assert_eq!(md(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        md(&["solve", "/nonexistent/graph.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(md(&["--help"]).status.code(), Some(0));
}

#[test]
fn prune_round_trips_canonical_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let text = "5 4\n0 1\n0 4\n1 2\n3 4\n";
    let g = write(dir.path(), "g.txt", text);
    let o = md(&["prune", s(&g)]);
    assert_eq!(stdout(&o), text);

    let out = dir.path().join("pruned.txt");
    let star = write(dir.path(), "star.txt", "# K_{1,3}\n4 3\n0 1\n0 2\n0 3\n");
    let o = md(&["prune", s(&star), "--out", s(&out)]);
    assert!(stdout(&o).contains("removed: 1\n"));
    assert_eq!(fs::read_to_string(&out).unwrap(), "3 2\n0 1\n0 2\n");
}

#[test]
fn kernel_and_reduction_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let p8 = write(
        dir.path(),
        "p8.txt",
        "8 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n",
    );
    let o = md(&["saving", "kernel", "-k", "1", s(&p8)]);
    assert_eq!(stdout(&o), "1 0\nk=1\ncertificate: 0\n");

    let hs = write(dir.path(), "hs.txt", "2 2 2\n0\n1\n");
    let text = stdout(&md(&["reduce", s(&hs)]));
    assert!(text.starts_with("20 "));
    assert!(text.contains("\nk=9\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("role ")).count(), 20);

    let o = md(&["verify", "reduction", s(&hs)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree: yes\n"));
}

#[test]
fn json_mirrors_text_keys() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let args = [
        "saving",
        "solve",
        "-k",
        "2",
        "--method",
        "randomized",
        s(&c4),
    ];
    let text = stdout(&md(&args));
    let mut with_json = args.to_vec();
    with_json.push("--json");
    let v: Value = serde_json::from_str(&stdout(&md(&with_json))).unwrap();
    let keys: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
    let json_keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, json_keys);
}

#[test]
fn sweep_small() {
    let o = md(&["verify", "sweep", "--max-n", "5", "--max-k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass: yes\n"));
    assert_eq!(
        md(&["verify", "sweep", "--max-n", "9", "--max-k", "2"])
            .status
            .code(),
        Some(2)
    );
}
