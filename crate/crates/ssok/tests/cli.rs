use std::process::{Command, Output};

use serde_json::Value;

fn ssok(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssok")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("ssok-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// JSON lines of a suite run with wall times removed.
fn stable_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            v.as_object_mut().unwrap().remove("millis");
            v
        })
        .collect()
}

#[test]
fn suite_assinv_is_deterministic() {
    let a = ssok(&["suite", "assinv"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let lines = stable_lines(&a);
    assert!(lines.len() >= 8);
    assert!(lines.iter().all(|l| l["criterion"] == 1));
    let find = |id: &str| lines.iter().find(|l| l["id"] == id).unwrap()["computed"].clone();
    assert_eq!(find("assinv.fiber"), "4");
    assert_eq!(find("assinv.ext.pi0"), "2");
    assert_eq!(find("assinv.bo.pi0"), "2");
    assert_eq!(stable_lines(&ssok(&["suite", "assinv"])), lines);
    assert!(stdout(&a).contains("0 failed"));
}

#[test]
fn suite_comm_and_jsonl_file() {
    let path = tmp("comm.jsonl");
    let o = ssok(&["suite", "comm", "--quiet", "--jsonl", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l.contains("comm.m1.no_retraction")));
    assert!(!stdout(&o).contains("{\"id\""));
}

#[test]
fn unknown_selector_is_an_error() {
    assert_eq!(ssok(&["suite", "everything"]).status.code(), Some(2));
}

#[test]
fn tw_of_the_arrow_as_dot() {
    let o = ssok(&["cat", "tw", "ordinal:1", "--format", "dot"]);
    let dot = stdout(&o);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 3);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 2);
}

#[test]
fn operad_without_unit_is_rejected() {
    let o = ssok(&["operad", "export", "--operad", "Comm", "--arity-bound", "2"]);
    let mut j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    j.as_object_mut().unwrap().remove("units");
    let path = tmp("no-unit.json");
    std::fs::write(&path, j.to_string()).unwrap();
    let o = ssok(&["operad", "fiber", "--operad", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unitality"));
}

#[test]
fn exported_operad_imports() {
    let o = ssok(&["operad", "export", "--operad", "AssInv", "--arity-bound", "3"]);
    let path = tmp("assinv.json");
    std::fs::write(&path, stdout(&o)).unwrap();
    let o = ssok(&["operad", "fiber", "--operad", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["size"], 4);
}

#[test]
fn certificates_round_trip_through_files() {
    let path = tmp("spine.json");
    let o = ssok(&["anodyne", "search", "spine:3", "simplex:3", "--class", "inner", "--cert", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ssok(&["anodyne", "verify", "--cert", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"valid\":true"));
    let o = ssok(&["anodyne", "search", "boundary:2", "simplex:2", "--class", "marked"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"witness\""));
}

#[test]
fn sset_commands() {
    assert_eq!(ssok(&["sset", "iso", "simplex:1", "spine:1"]).status.code(), Some(0));
    assert_eq!(ssok(&["sset", "iso", "simplex:2", "boundary:2"]).status.code(), Some(1));
    let o = ssok(&["sset", "s-lower", "simplex:1", "--format", "summary"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["counts"], serde_json::json!([4, 6, 4, 1]));
    assert_eq!(ssok(&["sset", "show", "horn:2,5"]).status.code(), Some(2));
}
