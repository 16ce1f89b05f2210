use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn dgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = dgp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn named(dir: &TempDir, name: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.txt"));
    let out = dgp(&["gen", "named", "--name", name, "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_examples() {
    let dir = TempDir::new().unwrap();
    let r = ok_json(&["solve", s(&named(&dir, "petersen")), "--algo", "cubic43"]);
    assert_eq!(r["density"], "5/2");
    assert_eq!(r["optimal"], true);
    let r = ok_json(&["solve", s(&named(&dir, "k6-minus-c5")), "--algo", "dense3"]);
    assert_eq!(r["density"], "7/4");
    assert_eq!(r["algorithm"], "dense3");
    let r = ok_json(&["solve", s(&named(&dir, "c5")), "--algo", "exact"]);
    assert_eq!(r["density"], "7/6");
    assert_eq!(r["optimal"], true);
    let r = ok_json(&["solve", s(&named(&dir, "k33"))]);
    assert_eq!(r["density"], "3/2");
}

#[test]
fn partition_output_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    let g = named(&dir, "prism");
    let part = dir.path().join("prism.part");
    let report = dir.path().join("prism.json");
    let out = dgp(&[
        "solve", s(&g), "--algo", "exact", "--partition-out", s(&part), "--out", s(&report),
    ]);
    assert!(out.status.success());
    for file in [&part, &report] {
        let r = ok_json(&["verify", s(&g), s(file), "--target", "2"]);
        assert_eq!(r["density"], "2/1");
        assert_eq!(r["meets_target"], true);
    }
    let r = ok_json(&["verify", s(&g), s(&part), "--target", "9/4"]);
    assert_eq!(r["meets_target"], false);
}

#[test]
fn rx3c_reduction_yields_a_cover() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("x.rx3c");
    fs::write(&inst, "p rx3c 2\ns 0 1 2\ns 3 4 5\ns 0 1 3\ns 2 4 5\ns 0 2 4\ns 1 3 5\n").unwrap();
    let g = dir.path().join("x.graph");
    let out = dgp(&["reduce", "rx3c", s(&inst), "--out", s(&g)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let meta = dir.path().join("x.graph.meta.json");
    assert!(meta.exists());
    let part = dir.path().join("x.part");
    let out = dgp(&["solve", s(&g), "--algo", "exact", "--max-n", "24", "--partition-out", s(&part)]);
    assert!(out.status.success());
    let r = ok_json(&["verify", s(&g), s(&part), "--meta", s(&meta)]);
    assert_eq!(r["target"], "7/1");
    assert_eq!(r["meets_target"], true);
    assert!(r["witness"].is_object(), "{r}");
}

#[test]
fn min_uncut_reduction_reports_target() {
    let dir = TempDir::new().unwrap();
    let g = named(&dir, "prism");
    let img = dir.path().join("img.graph");
    let out = dgp(&["reduce", "minuncut", s(&g), "--k", "1", "--out", s(&img)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("36 vertices"), "{err}");
    let out = dgp(&["reduce", "minuncut", s(&g), "--out", s(&img)]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "p graph 3 1\ne 0 1\n").unwrap();
    assert_eq!(dgp(&["solve", s(&bad)]).status.code(), Some(2));
    assert_eq!(dgp(&["solve", s(&dir.path().join("missing"))]).status.code(), Some(2));

    let g = named(&dir, "c5");
    let overlap = dir.path().join("overlap.part");
    fs::write(&overlap, "0 1 2\n2 3 4\n").unwrap();
    let out = dgp(&["verify", s(&g), s(&overlap)]);
    assert!(matches!(out.status.code(), Some(2) | Some(3)), "{out:?}");
    assert!(!out.status.success());

    let cubic_only = dgp(&["solve", s(&g), "--algo", "cubic43"]);
    assert_eq!(cubic_only.status.code(), Some(3));
    let too_big = dir.path().join("big.txt");
    let out = dgp(&["gen", "gnp", "--n", "20", "--out", s(&too_big)]);
    assert!(out.status.success());
    assert_eq!(dgp(&["solve", s(&too_big), "--algo", "exact"]).status.code(), Some(3));
}

#[test]
fn thread_count_does_not_change_the_answer() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    assert!(dgp(&["gen", "gnp", "--n", "10", "--seed", "3", "--out", s(&g)]).status.success());
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_dgp"))
            .env("DGP_THREADS", threads)
            .args(["solve", s(&g), "--algo", "exact"])
            .output()
            .unwrap();
        assert!(out.status.success());
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        (v["density"].clone(), v["blocks"].clone())
    };
    assert_eq!(run("1"), run("3"));
    let out = Command::new(env!("CARGO_BIN_EXE_dgp"))
        .env("DGP_THREADS", "many")
        .args(["solve", s(&g)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
