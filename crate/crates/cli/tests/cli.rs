use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpplanar")).args(args).output().expect("binary runs")
}

fn run_data(args: &[&str], file: &str) -> Output {
    let path = data(file);
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    run(&all)
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn decide_exit_codes() {
    let o = run_data(&["decide"], "intro.json");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["planar"], true);

    let o = run_data(&["decide"], "edge33.json");
    assert_eq!(o.status.code(), Some(10));
    assert_eq!(stdout_json(&o)["planar"], false);
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "g.json", r#"{"vertices": [{"id": "a", "order": 1}], "edges": []}"#);
    let o = run(&["decide", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let o = run(&["decide", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witnesses() {
    for file in ["edge33.json", "star.json", "k4.json"] {
        let o = run_data(&["witness"], file);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", String::from_utf8_lossy(&o.stderr));
        let w = stdout_json(&o);
        assert!(w["paths"].as_array().is_some_and(|p| !p.is_empty()), "{file}");
    }
    let o = run_data(&["witness"], "intro.json");
    assert_eq!(o.status.code(), Some(11));
}

#[test]
fn witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for file in ["edge33.json", "k4.json"] {
        let o = run_data(&["witness"], file);
        let w = write_temp(&dir, "w.json", std::str::from_utf8(&o.stdout).unwrap());
        let g = data(file);
        let o = run(&["check-witness", g.to_str().unwrap(), w.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "valid");

        let mut broken = stdout_json(&run_data(&["witness"], file));
        broken["paths"].as_array_mut().unwrap().pop();
        let w = write_temp(&dir, "bad.json", &broken.to_string());
        let o = run(&["check-witness", g.to_str().unwrap(), w.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{file}");
    }
}

#[test]
fn ball_output() {
    let dir = tempfile::tempdir().unwrap();
    let z5 = write_temp(&dir, "z5.json", r#"{"vertices": [{"id": "a", "order": 5}], "edges": []}"#);
    let o = run(&["--format", "dot", "ball", z5.to_str().unwrap(), "2"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), 5);

    let free = write_temp(
        &dir,
        "free.json",
        r#"{"vertices": [{"id": "a", "order": 2}, {"id": "b", "order": 2}], "edges": []}"#,
    );
    let o = run(&["ball", free.to_str().unwrap(), "3"]);
    assert_eq!(o.status.code(), Some(0));
    let b = stdout_json(&o);
    assert_eq!(b["vertices"].as_array().map(Vec::len), Some(7));
}

#[test]
fn ball_cap_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_temp(&dir, "big.json", r#"{"vertices": [{"id": "a", "order": 50}, {"id": "b", "order": 50}], "edges": []}"#);
    let o = run(&["--max-ball-vertices", "1000", "ball", g.to_str().unwrap(), "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn plans() {
    for file in ["intro.json", "spoke.json"] {
        let o = run_data(&["plan"], file);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert!(stdout_json(&o)["kind"].is_string());
    }
    let o = run_data(&["--format", "dot", "plan"], "intro.json");
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("digraph"));
    let o = run_data(&["plan"], "k4.json");
    assert_eq!(o.status.code(), Some(10));
}

#[test]
fn corpus() {
    let o = run(&["corpus", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["records"].as_array().map(Vec::len), Some(0));

    let o = run(&["corpus", "--seed", "9", "--count", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let report = stdout_json(&o);
    assert_eq!(report["inconsistencies"], 0);
    let again = stdout_json(&run(&["corpus", "--seed", "9", "--count", "15"]));
    let hashes = |r: &Value| r["records"].as_array().unwrap().iter().map(|x| x["input_hash"].clone()).collect::<Vec<_>>();
    assert_eq!(hashes(&report), hashes(&again));
}
