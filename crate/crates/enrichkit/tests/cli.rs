use std::path::PathBuf;
use std::process::{Command, Output};

fn enrichkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_enrichkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn spec(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("specs")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn valid_files_exit_zero() {
    for f in [
        "boolean_chain.json",
        "s3_two_object.json",
        "c3_one_object.json",
        "c2.json",
        "parallel_pair.json",
        "arrow.json",
    ] {
        let o = enrichkit(&["validate", "--spec", &spec(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
    }
}

#[test]
fn corrupted_category_exits_one() {
    let o = enrichkit(&["validate", "--spec", &spec("corrupted_c3.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("associativity fails"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n \"enrichkit-spec\": 1,\n").unwrap();
    let o = enrichkit(&["validate", "--spec", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    assert_eq!(enrichkit(&["yoneda"]).status.code(), Some(2));
    assert_eq!(enrichkit(&["validate", "--spec", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn tiny_size_cap_exits_three() {
    let o = enrichkit(&["yoneda", "--spec", &spec("s3_two_object.json"), "--max-size", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn yoneda_counts_presheaves() {
    let o = enrichkit(&["yoneda", "--spec", &spec("boolean_chain.json"), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"][0]["details"]["presheaves"], 3);
    let o = enrichkit(&[
        "yoneda",
        "--spec",
        &spec("s3_two_object.json"),
        "--check",
        "s3_two",
        "--format",
        "machine",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"][0]["details"]["presheaves"], 6);
    assert_eq!(v["summary"]["checks"], 3);
}

#[test]
fn swap_colimit_is_a_point() {
    let o = enrichkit(&[
        "wcolim",
        "--spec",
        &spec("parallel_pair.json"),
        "--check",
        "terminal*swap",
        "--format",
        "machine",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"][0]["details"]["apex"], 1);
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let o = enrichkit(&["fuzz", "--seed", "7", "--report", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
}
