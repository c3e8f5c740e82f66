use std::path::Path;
use std::process::{Command, Output};

use monotree::drawing::optimal_draw;
use monotree::render::parse_coords_tsv;
use monotree::tree::parse_tree;
use monotree::verify::{verify_monotone_drawing, VerifyMode};

fn monotree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monotree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn draw_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    let coords = dir.path().join("c.tsv");
    let stats = dir.path().join("s.json");

    let out = monotree(&["gen", "--kind", "random-recursive", "--n", "250", "--seed", "9", "-o", path_str(&tree)]);
    assert!(out.status.success());
    let out = monotree(&[
        "draw", "--tree", path_str(&tree), "--pair", "3,3", "-o", path_str(&coords), "--stats", path_str(&stats),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // the emitted files reproduce the in-memory result exactly
    let t = parse_tree(&std::fs::read_to_string(&tree).unwrap()).unwrap();
    let mem = optimal_draw(&t, 3, 3).unwrap();
    let file = parse_coords_tsv(&std::fs::read_to_string(&coords).unwrap()).unwrap();
    assert_eq!(file.coords(), mem.drawing.coords());
    let report = verify_monotone_drawing(&t, &file, VerifyMode::Exhaustive).unwrap();
    assert!(report.is_monotone());

    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["width"], mem.drawing.width());
    assert_eq!(json["within_bound"], true);
    assert_eq!(json["optimal"]["consumed"], mem.stats.consumed);

    for mode in ["exhaustive", "leaf"] {
        let out = monotree(&["verify", "--tree", path_str(&tree), "--coords", path_str(&coords), "--mode", mode]);
        assert_eq!(out.status.code(), Some(0));
    }

    let svg = dir.path().join("d.svg");
    let out = monotree(&["svg", "--tree", path_str(&tree), "--coords", path_str(&coords), "--scale", "4", "-o", path_str(&svg)]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn outputs_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    monotree(&["gen", "--kind", "caterpillar", "--n", "60", "-o", path_str(&tree)]);
    for algo in ["post-order", "path-draw", "optimal"] {
        let a = monotree(&["draw", "--tree", path_str(&tree), "--algo", algo]);
        let b = monotree(&["draw", "--tree", path_str(&tree), "--algo", algo]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn verify_reports_failure_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    let coords = dir.path().join("c.tsv");
    std::fs::write(&tree, "0 1\n1 2\n").unwrap();
    std::fs::write(&coords, "0\t0\t0\n1\t1\t0\n2\t0\t0\n").unwrap();
    let out = monotree(&["verify", "--tree", path_str(&tree), "--coords", path_str(&coords)]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("first witness 0 2"), "{text}");
}

#[test]
fn tabular_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    std::fs::write(&tree, "0 1\n1 2\n2 3\n0 4\n").unwrap();
    let out = monotree(&["decompose", "--tree", path_str(&tree)]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "index\tlevel\tleaf\tattachment\tedge_count\n0\t1\t3\t0\t3\n1\t1\t4\t0\t1\n"
    );
    let out = monotree(&["decompose", "--tree", path_str(&tree), "--perm", "4,3"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("0\t1\t4\t0\t1\n"));

    let out = monotree(&["vectors", "--pair", "3,3", "--levels", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 32);

    let out = monotree(&["certify", "--pair", "3,3", "--delta", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let out = monotree(&["certify", "--pair", "4,3", "--delta", "10"]);
    assert_eq!(out.status.code(), Some(1));

    let out = monotree(&["bench", "--sizes", "200", "--format", "json"]);
    assert!(out.status.success());
    let recs: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(recs.as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(monotree(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(monotree(&["draw", "--tree", "/nonexistent/t.txt"]).status.code(), Some(2));
    assert_eq!(monotree(&["vectors", "--pair", "4,3", "--levels", "1"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    std::fs::write(&tree, "0 1\n1 0\n").unwrap();
    let out = monotree(&["draw", "--tree", path_str(&tree)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = Command::new(env!("CARGO_BIN_EXE_monotree"))
        .args(["gen", "--kind", "path", "--n", "3"])
        .env("MONOTREE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
