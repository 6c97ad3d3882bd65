use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn edgereg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(args)
        .env_remove("EDGEREG_MAX_N")
        .env_remove("EDGEREG_FIELD")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_family_spec() {
    let o = edgereg(&["analyze", "ex2.2:1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["invariants"]["a_prime"]["value"], 1);
    assert_eq!(v["invariants"]["matching"]["value"], 2);
    assert!(v["vertex_decomposable"].get("yes").is_some());
}

#[test]
fn analyze_edge_list_file() {
    let path = std::env::temp_dir().join(format!("edgereg-c4-{}.txt", std::process::id()));
    std::fs::write(&path, "# four-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = edgereg(&["analyze", path.to_str().unwrap(), "--field", "q"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["reg"].as_u64(), v["pd"].as_u64()), (Some(1), Some(3)));
    assert_eq!(v["shellable"], "no");
    assert_eq!(v["vertex_decomposable"], "no");
    assert!(v["betti"].as_array().unwrap().contains(&serde_json::json!([3, 4, 1])));
}

#[test]
fn betti_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(["betti", "-", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total:    1    4    4    1"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(edgereg(&["analyze", "4 1\n0 5"]).status.code(), Some(2));
    assert_eq!(edgereg(&["analyze", "cycle:2"]).status.code(), Some(2));
    assert_eq!(edgereg(&["verify", "--field", "gf4"]).status.code(), Some(2));
    assert_eq!(edgereg(&["verify", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(edgereg(&["verify", "--theorems", "2.2"]).status.code(), Some(2));
    assert_eq!(edgereg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(edgereg(&["generate"]).status.code(), Some(2));
    assert_eq!(edgereg(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_is_clean_and_deterministic() {
    let args = ["verify", "--max-n", "5", "--seed", "7", "--format", "json"];
    let a = edgereg(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let b = edgereg(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    for (id, tally) in v["summary"].as_object().unwrap() {
        assert_eq!(tally["fail"], 0, "{id}");
    }
    assert!(v["records"].as_array().unwrap().iter().any(|r| r["source"] == "complement:dtree:2,5,7"));
}

#[test]
fn verify_tsv_and_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(["verify", "--format", "tsv", "--theorems", "katzman,froberg"])
        .env("EDGEREG_MAX_N", "4")
        .env("EDGEREG_CONNECTED", "true")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("source\tcanonical_code"));
    // 10 connected graphs on at most 4 vertices, two checks each
    assert_eq!(lines.count(), 20);
}

#[test]
fn generate_family_and_enumeration() {
    let o = edgereg(&["generate", "cycle:4"]);
    assert_eq!(stdout(&o), "4 4\n0 1\n0 3\n1 2\n2 3\n");
    let o = edgereg(&["generate", "--enumerate", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("# graph").count(), 11);
    let o = edgereg(&["generate", "--enumerate", "4", "--connected"]);
    assert_eq!(stdout(&o).matches("# graph").count(), 6);
}
