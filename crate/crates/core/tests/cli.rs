use std::path::PathBuf;

use matroid_kclass::cli::{poly_from_json, run};
use matroid_kclass::exactpoly::{Ambient, LaurentPoly};
use matroid_kclass::orbitclass::kclass;
use matroid_kclass::selftest::para34;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["matroid-kclass"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn kclass_text_output() {
    let (code, out, _) = call(&["kclass", &fixture("para34.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 - u1*u2*t3*t4\n");
    let (code, out, _) = call(&["kclass", &fixture("para34_matrix.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 - u1*u2*t3*t4\n");
}

#[test]
fn pos1_check_is_all_positive() {
    let (code, out, _) = call(&["check", &fixture("u24.json"), "--which", "pos1"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("Positive").count(), 5, "{}", out);
}

#[test]
fn invalid_input_exits_two() {
    let (code, out, err) = call(&["kclass", &fixture("bad.json")]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("exchange"), "{}", err);
    assert!(err.contains("[3, 4]"), "offending input echoed: {}", err);
    let (code, _, err) = call(&["kclass", &fixture("u38.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("resource guard"), "{}", err);
    let (code, _, _) = call(&["kclass", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["multiplicity", &fixture("para34.json"), "--basis", "3,4"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["check", &fixture("u23_loop.json"), "--which", "pos2"]);
    assert_eq!(code, 2);
}

#[test]
fn json_round_trip() {
    let (code, out, _) = call(&["kclass", &fixture("u24.json"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "kclass");
    assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
    let a = Ambient::new(2, 4);
    let back = poly_from_json(&v["result"]["kclass"], a).unwrap();
    assert_eq!(back, LaurentPoly::parse(a, "1 - u1^2*u2^2*t1*t2*t3*t4").unwrap());
    assert!(v.get("timing_ms").is_none());

    let (_, out, _) = call(&["expand", &fixture("u24.json"), "--basis", "grothendieck", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let coeffs = v["result"]["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 5);
    assert_eq!(coeffs[0]["label"], "(2,1)");
    let c = poly_from_json(&coeffs[0]["coefficient"], a).unwrap();
    assert_eq!(c, LaurentPoly::parse(a, "t1^-1*t4").unwrap());
    assert_eq!(v["result"]["residual"], "0");
}

#[test]
fn json_reingest_matches_library() {
    let (_, out, _) = call(&["chow", &fixture("para34.json"), "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let input = serde_json::to_string(&v["input"]["matroid"]).unwrap();
    let m = matroid_kclass::cli::parse_matroid(&input).unwrap();
    assert_eq!(m, para34());
    assert_eq!(kclass(&m).unwrap().poly().to_string(), "1 - u1*u2*t3*t4");
}

#[test]
fn output_is_independent_of_jobs() {
    let file = fixture("u24.json");
    let runs: Vec<String> = ["1", "2", "4"]
        .iter()
        .map(|j| call(&["check", &file, "--jobs", j, "--format", "json"]).1)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn other_subcommands() {
    let (code, out, _) = call(&["pn-class", &fixture("para34.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "S(M) = {(1,1,0,1), (1,1,1,0)}\nclass = t3 + t4\n");
    let (code, out, _) = call(&["characters", &fixture("u24.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "(4): 1\n(3,1): 3\n(2,2): 1\n");
    let (code, out, _) = call(&["characters", &fixture("u23_loop.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("warning:"));
    let (code, out, _) = call(&["multiplicity", &fixture("para34.json"), "--basis", "1,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("/"), "{}", out);
    let (code, out, _) = call(&["chow", &fixture("u23_loop.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "u1*u2 + u1*t4 + u2*t4 + t4^2\n");
    let (code, out, _) = call(&["expand", &fixture("u24.json"), "--basis", "double-schur"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(1,0): 2\n(0,0): -t1 - t2 + t3 + t4\n");
    let (code, out, _) = call(&["selftest"]);
    assert_eq!(code, 0, "{}", out);
    assert!(!out.contains("FAIL"));
    let (code, out, _) = call(&["kclass", &fixture("para34.json"), "--timing"]);
    assert_eq!(code, 0);
    assert!(out.contains("time:"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("matroid-kclass-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k.txt");
    let (code, out, _) = call(&["kclass", &fixture("para34.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 - u1*u2*t3*t4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
