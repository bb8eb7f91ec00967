use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_rootideals"));
    c.env_remove("ROOTIDEALS_GUARD");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--help"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "no-such-target"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "dunkl", "--c", "1/0"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "typeA-haiman", "--n", "9"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "symbolic-vs-ordinary", "--realization", "sideways"]).status.code(), Some(64));
    assert_eq!(run(&["cells", "table", "--n", "99"]).status.code(), Some(64));
    let o = bin().env("ROOTIDEALS_GUARD", "nonsense").arg("list").output().unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn resource_abort_exits_2() {
    let o = bin()
        .env("ROOTIDEALS_GUARD", "basis=3")
        .args(["verify", "g2-ideal-equality"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn usage_dominates_other_failures() {
    let o = bin()
        .env("ROOTIDEALS_GUARD", "basis=3")
        .args(["verify", "g2-ideal-equality", "no-such-target"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn list_names_every_target() {
    let o = run(&["list"]);
    assert!(o.status.success());
    let names: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    for t in [
        "b3-invariant-images",
        "b3-strict-inclusion",
        "cells",
        "delta-identity",
        "dunkl",
        "g2-ideal-equality",
        "rank-one-chain",
        "symbolic-vs-ordinary",
        "typeA-haiman",
    ] {
        assert!(names.iter().any(|n| n == t), "missing {t}");
    }
}

#[test]
fn cells_table_matches_golden() {
    let tsv = run(&["cells", "table", "--n", "3"]);
    assert!(tsv.status.success());
    assert_eq!(tsv.stdout, std::fs::read(fixture("cells_n3.tsv")).unwrap());
    let json = run(&["cells", "table", "--n", "3", "--format", "json"]);
    assert_eq!(json.stdout, std::fs::read(fixture("cells_n3.json")).unwrap());
}

#[test]
fn cells_table_n0_is_header_only() {
    let o = run(&["cells", "table", "--n", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "partition\theart\tbipartition\tsymbol\n");
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.tsv");
    let o = run(&["cells", "table", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 6);
}

#[test]
fn same_seed_same_json() {
    let args = ["verify", "dunkl", "--type", "B2", "--samples", "5", "--seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["parameters"]["seed"], 7);
    assert_eq!(v["status"], "pass");
}

#[test]
fn several_targets_give_array_in_order() {
    let o = run(&["verify", "rank-one-chain", "cells", "--format", "json", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let targets: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["target"].as_str().unwrap()).collect();
    assert_eq!(targets, ["rank-one-chain", "cells"]);
}

#[test]
fn timings_are_opt_in() {
    let plain: serde_json::Value =
        serde_json::from_slice(&run(&["verify", "cells", "--format", "json"]).stdout).unwrap();
    assert!(plain.get("timings").is_none_or(|t| t.is_null()));
    let timed: serde_json::Value =
        serde_json::from_slice(&run(&["verify", "cells", "--format", "json", "--timings"]).stdout).unwrap();
    assert!(timed["timings"].is_object());
}

#[test]
fn report_round_trips_saved_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let o = run(&["verify", "cells", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let again = run(&["report", path.to_str().unwrap(), "--format", "json"]);
    assert!(again.status.success());
    assert_eq!(again.stdout, std::fs::read(&path).unwrap());
    let tsv = run(&["report", path.to_str().unwrap(), "--format", "tsv"]);
    assert!(stdout(&tsv).starts_with("target\tcheck\tstatus\texpected\tobserved\twitness\n"));
}

fn strip_version(mut v: serde_json::Value) -> serde_json::Value {
    v.as_object_mut().unwrap().remove("toolkitVersion");
    v
}

#[test]
fn verdicts_match_goldens() {
    for (target, file) in [
        ("g2-ideal-equality", "g2_ideal_equality.json"),
        ("b3-strict-inclusion", "b3_strict_inclusion.json"),
    ] {
        let o = run(&["verify", target, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{target}");
        let got: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let want: serde_json::Value = serde_json::from_slice(&std::fs::read(fixture(file)).unwrap()).unwrap();
        assert_eq!(strip_version(got), strip_version(want), "{target}");
    }
}
