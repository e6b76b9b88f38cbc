use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke0")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares against the stored file; `HECKE0_BLESS=1` rewrites it.
fn golden(file: &str, args: &[&str]) {
    let got = stdout(args);
    let path = golden_dir().join(file);
    if std::env::var_os("HECKE0_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(got == want, "{file} differs from `hecke0 {}`", args.join(" "));
}

fn tsv(text: &str) -> Vec<Vec<String>> {
    text.lines().map(|l| l.split('\t').map(String::from).collect()).collect()
}

#[test]
fn golden_classes() {
    for (d, l) in [("A1-sc", "4"), ("A1-ad", "4"), ("A2-ad", "4"), ("A2-sc", "3"), ("C2", "3"), ("G2", "3")] {
        golden(&format!("classes_{d}_L{l}.tsv"), &["classes", "--datum", d, "--max-len", l]);
    }
}

#[test]
fn golden_cocenter_projections() {
    for (d, l) in [("A1-sc", "4"), ("A2-ad", "3"), ("C2", "3")] {
        golden(&format!("cocenter_{d}_L{l}.tsv"), &["cocenter", "project", "--datum", d, "--max-len", l]);
    }
}

#[test]
fn golden_character_tables() {
    for (d, l) in [("A1-sc", "4"), ("A1-ad", "4"), ("A2-ad", "3"), ("C2", "3")] {
        golden(&format!("chartable_{d}_L{l}.tsv"), &["module", "chartable", "--datum", d, "--max-len", l]);
    }
}

#[test]
fn identity_class_has_zero_newton_point() {
    let rows = tsv(&stdout(&["classes", "--datum", "A1-sc", "--max-len", "2"]));
    let e = rows.iter().find(|r| r[0] == "e").unwrap();
    assert_eq!(e[1], "0");
    assert_eq!(e[3], "(0)");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classes", "--datum", "C2", "--max-len", "4", "--format", "json"][..],
        &["module", "chartable", "--datum", "A2-sc", "--max-len", "3"],
        &["hecke", "mul", "--datum", "G2", "--mode", "generic", "s0*s1", "s2*s1*s0"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn json_and_tsv_character_tables_agree() {
    let args = ["module", "chartable", "--datum", "A2-ad", "--max-len", "3"];
    let t = tsv(&stdout(&args));
    let j: Value = serde_json::from_str(&stdout(&[&args[..], &["--format", "json"]].concat())).unwrap();
    let classes: Vec<&str> = j["classes"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(t[0][1..], classes[..]);
    let rows = j["rows"].as_array().unwrap();
    assert_eq!(rows.len(), t.len() - 1);
    for (r, line) in rows.iter().zip(&t[1..]) {
        assert_eq!(r["module"].as_str().unwrap(), line[0]);
        let vals: Vec<&str> = r["values"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        assert_eq!(vals[..], line[1..]);
    }
}

#[test]
fn single_module_gives_one_row() {
    let t = tsv(&stdout(&["module", "chartable", "--datum", "A2-sc", "--max-len", "3", "--J", "1,2", "--Gamma", "s0"]));
    assert_eq!(t.len(), 2);
    assert_eq!(t[1][1], "3");
}

#[test]
fn full_level_rows_vanish_on_non_rigid_classes() {
    for d in ["A1-sc", "A2-ad", "C2"] {
        let classes = tsv(&stdout(&["classes", "--datum", d, "--max-len", "4"]));
        let rigid: Vec<bool> = classes[1..].iter().map(|r| r[5] == "true").collect();
        let table = tsv(&stdout(&["module", "chartable", "--datum", d, "--max-len", "4"]));
        let full = if d == "A1-sc" { "J={s1} " } else { "J={s1,s2} " };
        let mut seen = 0;
        for row in table[1..].iter().filter(|r| r[0].starts_with(full)) {
            for (v, &r) in row[1..].iter().zip(&rigid) {
                assert!(r || v == "0", "{d} {}", row[0]);
            }
            seen += 1;
        }
        assert!(seen > 0);
    }
}

#[test]
fn decompose_recovers_a_module() {
    let dir = std::env::temp_dir().join(format!("hecke0-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("row.json");
    let f = file.to_str().unwrap();
    stdout(&[
        "module", "chartable", "--datum", "C2", "--max-len", "7", "--J", "1", "--Gamma", "s1", "--format", "json", "--out", f,
    ]);
    let t = tsv(&stdout(&["module", "decompose", "--datum", "C2", "--max-len", "7", "--input", f]));
    assert_eq!(t, vec![vec!["J={s1} Gamma={s1} chi=[1]".to_string(), "1".to_string()]]);

    std::fs::write(&file, r#"{"e": "1/2"}"#).unwrap();
    assert_eq!(run(&["module", "decompose", "--datum", "C2", "--max-len", "3", "--input", f]).status.code(), Some(1));
    std::fs::write(&file, r#"{"e": "x"}"#).unwrap();
    assert_eq!(run(&["module", "decompose", "--datum", "C2", "--max-len", "3", "--input", f]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hecke_terms_in_both_modes() {
    let zero: Value = serde_json::from_str(&stdout(&["hecke", "pow", "--datum", "A1-ad", "s0", "2"])).unwrap();
    assert_eq!(zero, serde_json::json!([{"element": "t[1]*s1", "coefficient": "-1"}]));
    let generic = tsv(&stdout(&["hecke", "pow", "--datum", "A1-ad", "--mode", "generic", "--format", "tsv", "s1", "2"]));
    assert_eq!(generic, vec![vec!["e", "q"], vec!["s1", "q - 1"]]);
    let iota = tsv(&stdout(&["hecke", "iota", "--datum", "A1-ad", "--format", "tsv", "s1"]));
    assert_eq!(iota, vec![vec!["e", "-1"], vec!["s1", "-1"]]);
}

#[test]
fn cocenter_check_passes() {
    let t = tsv(&stdout(&["cocenter", "check", "--datum", "A2-sc", "--max-len", "3"]));
    assert_eq!(t[1], vec!["violations", "0"]);
}

#[test]
fn classes_sstest_and_verify_exit_zero() {
    let t = tsv(&stdout(&["module", "sstest", "--datum", "A1-sc", "--max-len", "4"]));
    for row in &t[1..] {
        assert_eq!(row[3], row[7], "{row:?}");
    }
    let v = stdout(&["verify", "--max-len", "0"]);
    assert_eq!(v.lines().count(), 10);
    assert!(v.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn usage_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("hecke0-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"name": "bad", "xRank": 1, "pairing": [[1]], "simpleRoots": [[3]], "simpleCoroots": [[1]]}"#).unwrap();
    let truncated = dir.join("truncated.json");
    std::fs::write(&truncated, r#"{"name": "#).unwrap();
    for args in [
        &["classes"][..],
        &["classes", "--datum", "Z9"],
        &["classes", "--datum", bad.to_str().unwrap()],
        &["classes", "--datum", truncated.to_str().unwrap()],
        &["classes", "--datum", "GL2"],
        &["hecke", "mul", "--datum", "A2-ad", "s9"],
        &["hecke", "mul", "--datum", "A2-ad", "--format", "dot", "s1"],
        &["module", "build", "--datum", "A2-sc", "--J", "4"],
        &["module", "build", "--datum", "A1-sc", "--J", "1", "--chi", "2"],
        &["verify", "--phase", "11"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
