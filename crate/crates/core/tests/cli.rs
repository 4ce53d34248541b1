use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn input(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../inputs").join(name)
}

fn vnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vnum"))
        .args(args)
        .env_remove("VNUM_CACHE_DIR")
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn vnumber_and_ass() {
    let doc = input("node_n4.json");
    let out = vnum(&["vnumber", path(&doc)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["v"], 7);
    assert_eq!(v["witness"]["X,Y"], "X^7");

    let out = vnum(&["ass", path(&input("weighted.json"))]);
    assert_eq!(json_of(&out)["ass"], serde_json::json!([["X", "Y"], ["X", "Z"]]));
}

#[test]
fn family_csv_v_column() {
    let out = vnum(&["family", path(&input("xyz.json")), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let header = rdr.headers().unwrap().clone();
    assert_eq!(header.iter().take(4).collect::<Vec<_>>(), ["n", "indeg", "v", "ass"]);
    let v: Vec<i64> = rdr.records().map(|r| r.unwrap()[2].parse().unwrap()).collect();
    assert_eq!(v, [3, 4, 5, 7, 10, 13, 15, 17, 19]);
}

#[test]
fn stdin_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("v.json");
    let mut child = Command::new(env!("CARGO_BIN_EXE_vnum"))
        .args(["vnumber", "-", "--out", path(&target)])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"ring":{"vars":["X","Y"]},"module":{"den":["X"]}}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["v"], 0);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"ring":{"vars":["X"]},"module":{"den":["X^0"]}}"#).unwrap();
    let out = vnum(&["ass", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    assert_eq!(vnum(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(vnum(&["ass", "/nonexistent/doc.json"]).status.code(), Some(1));
    // the M/I^nN family has no Rees quotient of its own
    let out = vnum(&["probe", path(&input("principal.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error["));
    // a family command without a family section
    assert_eq!(vnum(&["family", path(&input("node_n4.json"))]).status.code(), Some(1));
}

#[test]
fn check_and_golden() {
    let out = vnum(&["check", path(&input("xyz.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let items = json_of(&out)["items"].as_array().unwrap().clone();
    assert_eq!(items.len(), 8);
    assert!(items.iter().all(|i| i["verdict"] != "FAIL"));

    let out = vnum(&["verify-golden"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["failed"], 0);
}

#[test]
fn cache_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let doc = input("weighted.json");
    let args = ["family", path(&doc), "--cache-dir", path(dir.path())];
    let first = vnum(&args);
    let second = vnum(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let longer = vnum(&["family", path(&doc), "--cache-dir", path(dir.path()), "--n-max", "8"]);
    let fresh = vnum(&["family", path(&doc), "--n-max", "8"]);
    assert_eq!(longer.stdout, fresh.stdout);
}
