use std::process::Command;

use freeqg::matrix_file::write_matrix;
use freeqg::ExactMatrix;
use freeqg_cli::run;
use serde_json::{json, Value};

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["freeqg"];
    argv.extend_from_slice(args);
    let out = run(argv);
    (out.code, out.document)
}

fn result(args: &[&str]) -> Value {
    let (code, doc) = call(args);
    assert_eq!(code, 0, "{doc}");
    doc["result"].clone()
}

fn matrix_file(m: &ExactMatrix) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    write_matrix(f.path(), m).unwrap();
    f
}

#[test]
fn documents_have_stable_fields() {
    for args in [
        vec!["fuse", "a", "b"],
        vec!["moment", "abab"],
        vec!["catalan", "3"],
        vec!["fock", "ab"],
        vec!["powers", "lemma12", "--len", "6"],
    ] {
        let (code, doc) = call(&args);
        assert_eq!(code, 0);
        let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["inputs", "provenance", "result", "verb"]);
    }
}

#[test]
fn fuse_and_decompose() {
    assert_eq!(result(&["fuse", "a", "b"]), json!({"ab": 1, "e": 1}));
    assert_eq!(result(&["fuse", "a", "a"]), json!({"aa": 1}));
    assert_eq!(result(&["fuse", "e", "bab"]), json!({"bab": 1}));
    assert_eq!(result(&["fuse", "α", "β"]), json!({"ab": 1, "e": 1}));
    assert_eq!(result(&["decompose", "ab"]), json!({"ab": 1, "e": 1}));
    assert_eq!(
        result(&["decompose", "abab"]),
        json!({"abab": 1, "ab": 3, "e": 2})
    );
}

#[test]
fn counting_verbs() {
    assert_eq!(result(&["moment", "abab"]), json!(2));
    assert_eq!(result(&["moment", "e"]), json!(1));
    assert_eq!(result(&["catalan", "aabb"]), json!(1));
    assert_eq!(result(&["catalan", "4"]), json!(14));
    assert_eq!(result(&["fock", "abab"]), json!(2));
    assert_eq!(result(&["pairings", "3"])["count"], json!(5));
    let listed = result(&["pairings", "2", "--list"]);
    assert_eq!(listed["pairings"], json!([[[1, 2], [3, 4]], [[1, 4], [2, 3]]]));
    assert_eq!(result(&["pairings", "aa"])["count"], json!(0));
}

#[test]
fn dimensions() {
    assert_eq!(result(&["dims", "--group", "u", "--n", "2", "ab"]), json!(3));
    assert_eq!(result(&["dims", "--group", "u", "--n", "3", "aa"]), json!(9));
    assert_eq!(result(&["dims", "--group", "o", "--n", "2", "10"]), json!(11));
    let (code, doc) = call(&["dims", "--group", "u", "--n", "1", "a"]);
    assert_eq!(code, 1);
    assert!(doc["error"].as_str().unwrap().contains("n must be at least 2"));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["fuse", "a", "x"]).0, 2);
    assert_eq!(call(&["moment", ""]).0, 2);
    assert_eq!(call(&["no-such-verb"]).0, 2);
    assert_eq!(call(&["fuse", "a"]).0, 2);
    assert_eq!(call(&["dims", "--group", "o", "--n", "2", "ab"]).0, 2);
    assert_eq!(call(&["fixed-dim", "--matrix", "/nonexistent/f.json", "ab"]).0, 2);
    assert_eq!(call(&["powers", "lemma10", "--dim", "3", "--delta", "1/2"]).0, 1);
    assert_eq!(call(&["powers", "lemma12", "--len", "5"]).0, 1);
}

#[test]
fn matrix_verbs() {
    let su2 = matrix_file(&ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
    let diag = matrix_file(&ExactMatrix::from_ints(&[&[1, 0], &[0, 2]]));
    let su2p = su2.path().to_str().unwrap();
    let diagp = diag.path().to_str().unwrap();

    assert_eq!(result(&["o-span", "--matrix", su2p, "3"]), json!(5));
    let (code, doc) = call(&["o-span", "--matrix", diagp, "1"]);
    assert_eq!(code, 1);
    assert!(doc["error"].as_str().unwrap().contains("NOT_O_ADMISSIBLE"));

    assert_eq!(result(&["fixed-dim", "--matrix", diagp, "abab"]), json!(2));
    assert_eq!(result(&["fixed-dim", "--matrix", diagp, "a"]), json!(0));

    assert_eq!(result(&["haar", "--matrix", su2p, "e"]), json!([[["1/1", "0/1"]]]));
    let p = result(&["haar", "--matrix", su2p, "a"]);
    assert_eq!(p.as_array().unwrap().len(), 2);
    assert!(p.as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).all(|z| z == &json!(["0/1", "0/1"])));
    assert_eq!(
        result(&["haar", "--matrix", su2p, "ab", "--entry", "1,2"]),
        json!(["-1/2", "0/1"])
    );
    assert_eq!(call(&["haar", "--matrix", su2p, "ab", "--entry", "1"]).0, 2);
    assert_eq!(call(&["haar", "--matrix", su2p, "ab", "--entry", "9,0"]).0, 1);
}

#[test]
fn guardrail_and_force() {
    let id = matrix_file(&ExactMatrix::identity(3));
    let p = id.path().to_str().unwrap();
    let (code, doc) = call(&["fixed-dim", "--matrix", p, "aaaaabbbb"]);
    assert_eq!(code, 1);
    assert!(doc["error"].as_str().unwrap().contains("--force"));
    assert_eq!(result(&["fixed-dim", "--matrix", p, "aaaaabbbb", "--force"]), json!(0));
}

#[test]
fn powers_verbs() {
    let r = result(&["powers", "lemma12", "--len", "8"]);
    assert_eq!(r["pass"], json!(true));
    assert_eq!(result(&["powers", "lemma13", "--set", "ab,ba"])["n"], json!(1));
    assert_eq!(result(&["powers", "lemma13", "--set", ""])["n"], json!(0));
    assert_eq!(result(&["powers", "lemma13", "--set", "ab", "--max-n", "0"])["n"], json!(null));
    let r = result(&["powers", "lemma10", "--dim", "2", "--delta", "0.3", "--trials", "200", "--seed", "4"]);
    assert_eq!(r["pass"], json!(true));
}

#[test]
fn verify_small() {
    let (code, doc) = call(&["verify", "--max-len", "4"]);
    assert_eq!(code, 0, "{doc}");
    let suites = doc["result"]["suites"].as_array().unwrap();
    let names: Vec<&str> = suites.iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, freeqg::verify::suite_names());
    assert!(suites.iter().all(|s| s["pass"] == json!(true)));
}

#[test]
fn binary_prints_json_and_sets_exit_code() {
    let exe = env!("CARGO_BIN_EXE_freeqg");
    let out = Command::new(exe).args(["moment", "abab"]).output().unwrap();
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"], json!(2));
    assert_eq!(doc["verb"], json!("moment"));

    let out = Command::new(exe).args(["fuse", "a", "q"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(exe).args(["--help"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify"));
}
