use std::fs;
use std::process::{Command, Output};

fn trisep(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trisep")).args(args).current_dir(dir).output().unwrap()
}

fn write(dir: &std::path::Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_then_decompose_a_wheel() {
    let tmp = tempfile::tempdir().unwrap();
    let g = trisep(&["gen", "wheel", "6"], tmp.path());
    assert_eq!(g.status.code(), Some(0));
    let input = write(tmp.path(), "w6.txt", &stdout(&g));
    let d = trisep(&["decompose", "-i", &input, "-o", "w6.json"], tmp.path());
    assert_eq!(d.status.code(), Some(0), "{}", String::from_utf8_lossy(&d.stderr));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("w6.json")).unwrap()).unwrap();
    assert_eq!(json["n_family"].as_array().unwrap().len(), 0);
    assert_eq!(json["stars"][0]["torso"]["class"], "wheel");
    let text = trisep(&["report", "-i", "w6.json", "--emit", "text"], tmp.path());
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("wheel torso"));
}

#[test]
fn decompose_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "g.txt", &stdout(&trisep(&["gen", "necklace", "3"], tmp.path())));
    let a = trisep(&["decompose", "-i", &input], tmp.path());
    let b = trisep(&["decompose", "-i", &input], tmp.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn graph6_input() {
    let tmp = tempfile::tempdir().unwrap();
    let g6 = stdout(&trisep(&["gen", "k3m", "3", "--format", "graph6"], tmp.path()));
    let input = write(tmp.path(), "k33.g6", &g6);
    let d = trisep(&["decompose", "-i", &input, "--format", "graph6", "--emit", "text"], tmp.path());
    assert_eq!(d.status.code(), Some(0));
    assert!(stdout(&d).contains("6 vertices, 9 edges"));
}

#[test]
fn usage_and_precondition_errors_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    let path = write(tmp.path(), "path.txt", "0 1\n1 2\n2 3\n");
    let d = trisep(&["decompose", "-i", &path], tmp.path());
    assert_eq!(d.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&d.stderr).contains("not 3-connected"));
    let looped = write(tmp.path(), "loop.txt", "0 1\n2 2\n");
    let l = trisep(&["decompose", "-i", &looped], tmp.path());
    assert_eq!(l.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&l.stderr).contains("line 2"));
    assert_eq!(trisep(&["verify", "nosuch"], tmp.path()).status.code(), Some(2));
    assert_eq!(trisep(&["frobnicate"], tmp.path()).status.code(), Some(2));
}

#[test]
fn enumerate_totally_nested_on_a_wheel_is_empty() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "w6.txt", &stdout(&trisep(&["gen", "wheel", "6"], tmp.path())));
    let e = trisep(&["enumerate", "-i", &input, "--tri", "--totally-nested"], tmp.path());
    assert_eq!(e.status.code(), Some(0));
    let list: Vec<serde_json::Value> = serde_json::from_str(&stdout(&e)).unwrap();
    assert!(list.is_empty());
    let all = trisep(&["enumerate", "-i", &input, "--tri"], tmp.path());
    let list: Vec<serde_json::Value> = serde_json::from_str(&stdout(&all)).unwrap();
    assert!(!list.is_empty());
}

#[test]
fn verify_tutte_passes() {
    let tmp = tempfile::tempdir().unwrap();
    let v = trisep(&["verify", "tutte", "--max-n", "7"], tmp.path());
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    assert!(stdout(&v).contains("0 failures"));
}

#[test]
fn classification_counterexample_exits_one_with_a_dump() {
    let tmp = tempfile::tempdir().unwrap();
    let v = trisep(&["verify", "main", "--max-n", "7", "--families", "none", "--dump", "cx"], tmp.path());
    assert_eq!(v.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&v.stderr);
    assert!(stderr.contains("cx/main-0000.edgelist"), "{stderr}");
    let dumped = fs::read_to_string(tmp.path().join("cx/main-0000.edgelist")).unwrap();
    let d = trisep(&["decompose", "-i", "cx/main-0000.edgelist", "--emit", "text"], tmp.path());
    assert_eq!(d.status.code(), Some(1), "{dumped}");
}

#[test]
fn twosep_of_a_cycle() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "c5.txt", &stdout(&trisep(&["gen", "cycle", "5"], tmp.path())));
    let t = trisep(&["twosep", "-i", &input], tmp.path());
    assert_eq!(t.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&t)).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(json["nodes"][0]["kind"], "cycle");
}
