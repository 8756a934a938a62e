use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forge"))
        .args(args)
        .output()
        .expect("forge runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad record {l:?}: {e}")))
        .collect()
}

fn last(out: &Output, kind: &str) -> Value {
    records(out)
        .into_iter()
        .rev()
        .find(|r| r["record"] == kind)
        .unwrap_or_else(|| panic!("no {kind} record in {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Writes the transposition class of `Sym(4)` and returns its path.
fn transpositions(dir: &TempDir) -> PathBuf {
    let group = path(dir, "s4.txt");
    let x = path(dir, "x.txt");
    assert!(forge(&["make", "group", "symmetric", "4", "--out", s(&group)]).status.success());
    // Element 2 in lexicographic order is the transposition (2 3).
    assert!(forge(&["make", "conj", "--group", s(&group), "--elem", "2", "--out", s(&x)]).status.success());
    x
}

#[test]
fn make_validate_and_props() {
    let dir = TempDir::new().unwrap();
    let d3 = path(&dir, "d3.txt");
    let out = forge(&["make", "dihedral", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3\n1 3 2\n3 2 1\n2 1 3\n");
    fs::write(&d3, &out.stdout).unwrap();

    let v = last(&forge(&["validate", "--quandle", s(&d3)]), "validate");
    assert_eq!(v["valid"], true);
    let p = last(&forge(&["props", "--quandle", s(&d3)]), "props");
    assert_eq!(p["order"], 3);
    assert_eq!(p["connected"], true);
    assert_eq!(p["faithful"], true);
    assert_eq!(p["inner_group_order"], 6);

    let x = transpositions(&dir);
    let p = last(&forge(&["props", "--quandle", s(&x)]), "props");
    assert_eq!(p["order"], 6);
    assert_eq!(p["inner_group_order"], 24);
}

#[test]
fn invalid_tables_exit_nonzero() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.txt");
    fs::write(&bad, "2\n1 2\n1 2\n").unwrap();
    let out = forge(&["validate", "--quandle", s(&bad)]);
    assert!(!out.status.success());
    let v = last(&out, "validate");
    assert_eq!(v["valid"], false);
    assert_eq!(v["axiom"], "invertibility");

    fs::write(&bad, "2\n1 1\n").unwrap();
    let out = forge(&["props", "--quandle", s(&bad)]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn h2_emits_representatives() {
    let dir = TempDir::new().unwrap();
    let x = transpositions(&dir);
    let reps = path(&dir, "reps");
    let h = last(&forge(&["h2", "--quandle", s(&x), "--mod", "2", "--emit-reps", s(&reps)]), "h2");
    assert_eq!(h["invariant_factors"], serde_json::json!([2]));
    assert_eq!(h["cocycle_count"], "64");
    let rep = fs::read_to_string(reps.join("rep1.txt")).unwrap();
    assert!(rep.starts_with("6 2\n"));

    let d3 = path(&dir, "d3.txt");
    fs::write(&d3, forge(&["make", "dihedral", "3"]).stdout).unwrap();
    for m in ["2", "3"] {
        let h = last(&forge(&["h2", "--quandle", s(&d3), "--mod", m]), "h2");
        assert_eq!(h["invariant_factors"], serde_json::json!([]));
    }
}

#[test]
fn extension_pipeline_end_to_end() {
    let dir = TempDir::new().unwrap();
    let x = transpositions(&dir);
    let reps = path(&dir, "reps");
    assert!(forge(&["h2", "--quandle", s(&x), "--mod", "2", "--emit-reps", s(&reps)]).status.success());
    let phi = reps.join("rep1.txt");

    let out = forge(&["verdict", "--quandle", s(&x), "--cocycle", s(&phi)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = last(&out, "verdict");
    assert_eq!(v["extension_order"], 12);
    assert_eq!(v["extension_faithful"], false);
    assert_eq!(v["conjugation"]["verdict"], "yes");
    assert_eq!(v["invariant_constant_on_corpus"], true);
    assert!(records(&out).iter().filter(|r| r["record"] == "invariant").count() >= 19);

    let e = path(&dir, "e.txt");
    let ext = last(&forge(&["extend", "--quandle", s(&x), "--cocycle", s(&phi), "--out", s(&e)]), "extension");
    assert_eq!(ext["order"], 12);
    let seq = last(&forge(&["inn-seq", "--quandle", s(&e)]), "inn_sequence");
    assert_eq!(seq["orders"], serde_json::json!([12, 6]));

    let recovered = path(&dir, "recovered.txt");
    let out = forge(&["recover-ext", "--quandle", s(&e), "--out", s(&recovered)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(fs::read_to_string(&recovered).unwrap().starts_with("6 2\n"));

    let v = last(&forge(&["conjugation", "--quandle", s(&e)]), "conjugation");
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["group_order"], 48);
}

#[test]
fn recover_along_an_explicit_map() {
    let dir = TempDir::new().unwrap();
    let d3 = path(&dir, "d3.txt");
    fs::write(&d3, forge(&["make", "dihedral", "3"]).stdout).unwrap();
    let zero = path(&dir, "zero.txt");
    fs::write(&zero, "3 2\n0 0 0\n0 0 0\n0 0 0\n").unwrap();
    let e = path(&dir, "e.txt");
    assert!(forge(&["extend", "--quandle", s(&d3), "--cocycle", s(&zero), "--out", s(&e)]).status.success());
    let map = path(&dir, "map.txt");
    fs::write(&map, "1 1 2 2 3 3\n").unwrap();
    let out = forge(&["recover-ext", "--quandle", s(&e), "--target", s(&d3), "--map", s(&map)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = last(&out, "recovered");
    assert_eq!(r["isomorphism"].as_array().unwrap().len(), 6);

    fs::write(&map, "1 1 2 2 3\n").unwrap();
    assert!(!forge(&["recover-ext", "--quandle", s(&e), "--target", s(&d3), "--map", s(&map)]).status.success());
}

#[test]
fn certificates_for_four_cycles() {
    let dir = TempDir::new().unwrap();
    let group = path(&dir, "s4.txt");
    let x = path(&dir, "x.txt");
    assert!(forge(&["make", "group", "symmetric", "4", "--out", s(&group)]).status.success());
    // Element 10 in lexicographic order is [1, 2, 3, 0], a 4-cycle.
    assert!(forge(&["make", "conj", "--group", s(&group), "--elem", "10", "--out", s(&x)]).status.success());
    let reps = path(&dir, "reps");
    let h = last(&forge(&["h2", "--quandle", s(&x), "--mod", "4", "--emit-reps", s(&reps)]), "h2");
    assert_eq!(h["invariant_factors"], serde_json::json!([4]));
    let phi = reps.join("rep1.txt");

    let out = forge(&["certify", "--quandle", s(&x), "--cocycle", s(&phi)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let c = last(&out, "certify");
    assert!(c["certificates"].as_u64().unwrap() > 0);
    assert_eq!(c["conjugation"]["verdict"], "no");

    let out = forge(&["power-check", "--quandle", s(&x), "--cocycle", s(&phi), "--d", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let p = last(&out, "power");
    assert_eq!(p["m"], 2);
    assert_eq!(p["extension_order"], 12);
    assert!(!forge(&["power-check", "--quandle", s(&x), "--cocycle", s(&phi), "--d", "3"]).status.success());
}

#[test]
fn invariants_over_a_knot_file() {
    let dir = TempDir::new().unwrap();
    let d3 = path(&dir, "d3.txt");
    fs::write(&d3, forge(&["make", "dihedral", "3"]).stdout).unwrap();
    let zero = path(&dir, "zero.txt");
    fs::write(&zero, "3 2\n0 0 0\n0 0 0\n0 0 0\n").unwrap();
    let knots = path(&dir, "knots.txt");
    fs::write(&knots, "# two knots\n3_1;2;1,1,1\n4_1;3;1,-2,1,-2\n").unwrap();
    let out = forge(&[
        "invariant", "--quandle", s(&d3), "--cocycle", s(&zero), "--knots", s(&knots), "--tangle",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rs = records(&out);
    assert_eq!(rs.len(), 2);
    assert_eq!(rs[0]["knot"], "3_1");
    assert_eq!(rs[0]["invariant"]["coeffs"], serde_json::json!([9, 0]));
    assert_eq!(rs[1]["invariant"]["coeffs"], serde_json::json!([3, 0]));
    assert!(rs.iter().all(|r| r["constant"] == true && r["end_monochromatic"] == true));
    assert!(rs.iter().all(|r| r["translation_equality"] == true));

    fs::write(&knots, "hopf;2;1,1\n").unwrap();
    let out = forge(&["invariant", "--quandle", s(&d3), "--cocycle", s(&zero), "--knots", s(&knots)]);
    assert!(!out.status.success());
}

#[test]
fn conjugation_edge_cases() {
    let dir = TempDir::new().unwrap();
    let d4 = path(&dir, "d4.txt");
    fs::write(&d4, forge(&["make", "dihedral", "4"]).stdout).unwrap();
    let v = last(&forge(&["conjugation", "--quandle", s(&d4)]), "conjugation");
    assert_eq!(v["verdict"], "not_applicable");

    let x = transpositions(&dir);
    let out = forge(&["conjugation", "--quandle", s(&x), "--max-cosets", "5"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeded 5 cosets"));
}

#[test]
fn alexander_and_galex_tables() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.txt");
    assert!(forge(&["make", "alexander", "5", "2", "--out", s(&a)]).status.success());
    assert_eq!(last(&forge(&["props", "--quandle", s(&a)]), "props")["connected"], true);
    assert!(!forge(&["make", "alexander", "6", "2"]).status.success());

    let group = path(&dir, "s3.txt");
    assert!(forge(&["make", "group", "symmetric", "3", "--out", s(&group)]).status.success());
    let g = path(&dir, "g.txt");
    assert!(forge(&["make", "galex", "--group", s(&group), "--conj", "2", "--out", s(&g)]).status.success());
    assert_eq!(last(&forge(&["validate", "--quandle", s(&g)]), "validate")["order"], 6);
    assert!(!forge(&["make", "conj", "--group", s(&group), "--elem", "7"]).status.success());
}
