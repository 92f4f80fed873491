//! End-to-end coverage of the CLI: every exit code path plus golden values
//! through the file formats.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_thetacut")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn thetacut")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        !out.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn theta_petersen_golden() {
    let out = run(&["theta", "--family", "petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert!((v["theta"].as_f64().unwrap() - 4.0).abs() < 1e-4);
    assert!((v["theta_complement"].as_f64().unwrap() - 2.5).abs() < 1e-4);
    assert_eq!(v["certified"], true);
}

#[test]
fn theta_from_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let out = run(&["theta", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!((v["theta"].as_f64().unwrap() - 2.23607).abs() < 1e-4);
}

#[test]
fn theta_of_empty_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e3.txt");
    std::fs::write(&path, "3 0\n").unwrap();
    let out = run(&["theta", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!((v["theta"].as_f64().unwrap() - 3.0).abs() < 1e-4);
}

#[test]
fn theta_from_graph6_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pet.g6");
    std::fs::write(&path, "IheA@GUAo\n").unwrap();
    let out = run(&["theta", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("10,15,3.9999"), "csv: {text}");
}

#[test]
fn vecchrom_matches_strict_on_k4() {
    let out = run(&["vecchrom", "--family", "complete:4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let chi = v["chi_vec"].as_f64().unwrap();
    let strict = v["strict_vector_chromatic"].as_f64().unwrap();
    assert!((chi - 4.0).abs() < 1e-4);
    assert!((chi - strict).abs() <= 2e-4);
}

#[test]
fn maxcut_with_rounding() {
    let out = run(&["maxcut", "--family", "cycle:5", "--gw", "--trials", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["maxcut"], 4);
    assert!((v["surplus"].as_f64().unwrap() - 1.5).abs() < 1e-12);
    assert!((v["gw"]["closed_form_expected_cut"].as_f64().unwrap() - 4.0).abs() < 1e-4);
}

#[test]
fn bound_report_clean_on_c5() {
    let out = run(&[
        "bound",
        "--family",
        "cycle:5",
        "--vertex-transitive",
        "--edge-transitive",
        "--trials",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert!((v["theta_bar"].as_f64().unwrap() - 2.23607).abs() < 1e-4);
}

#[test]
fn generate_is_deterministic() {
    let a = run(&["generate", "--family", "erdos_renyi:10,0.5", "--seed", "9"]);
    let b = run(&["generate", "--family", "erdos_renyi:10,0.5", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["generate", "--family", "erdos_renyi:10,0.5", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn generate_graph6_kneser_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k52.g6");
    let out = run(&[
        "generate",
        "--family",
        "kneser:5,2",
        "--format",
        "graph6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(&path).exists());
    let out = run(&["theta", "--input", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    // Kneser(5,2) is the Petersen graph.
    assert!((v["theta"].as_f64().unwrap() - 4.0).abs() < 1e-4);
}

#[test]
fn estimate_p3_free_is_bounded_and_monotone() {
    let out = run(&[
        "estimate",
        "--forbidden",
        "P3",
        "--sizes",
        "6,8,10",
        "--trials",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut prev = 0.0f64;
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let max: f64 = cols[1].parse().unwrap();
        assert!(max <= 2.0 + 1e-3, "P3-free estimate exceeded bound: {line}");
        assert!(max >= prev, "max column must be nondecreasing");
        prev = max;
    }
}

#[test]
fn estimate_k2_free_is_all_ones() {
    let out = run(&["estimate", "--forbidden", "K2", "--sizes", "4,6", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let max: f64 = cols[1].parse().unwrap();
        assert!((max - 1.0).abs() <= 1e-5, "K2-free max should be 1: {line}");
    }
}

#[test]
fn exit_code_2_on_input_errors() {
    let out = run(&["theta", "--family", "cyclops:9"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 1\n0 0\n").unwrap();
    let out = run(&["theta", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Missing both --input and --family.
    let out = run(&["theta"]);
    assert_eq!(out.status.code(), Some(2));

    // Estimate size above the cap.
    let out = run(&["estimate", "--forbidden", "C3", "--sizes", "500", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_3_on_non_certified() {
    // A tolerance far below what the solver can certify within its
    // iteration budget forces the flagged-witness path.
    let out = run(&[
        "theta",
        "--family",
        "erdos_renyi:12,0.65",
        "--seed",
        "1035",
        "--tol",
        "1e-13",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["certified"], false);
    // The value is still reported.
    assert!(v["theta"].as_f64().unwrap() > 1.0);
}

#[test]
fn verify_subset_clean_and_injection_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("verify.json");
    let out = run(&[
        "verify",
        "--max-n",
        "5",
        "--trials",
        "5",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    assert!(v["graphs"].as_u64().unwrap() >= 20);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);

    // Test mode: a corrupted witness must surface as exit code 1 with the
    // violating graph serialized for reproduction.
    let out = run(&["verify", "--max-n", "4", "--trials", "3", "--inject-violation"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let viol = &v["violations"].as_array().unwrap()[0];
    assert_eq!(viol["check"], "injected_corrupt_witness");
    assert!(viol["edge_list"].as_str().unwrap().contains(' '));
}

#[test]
fn verify_empty_corpus_is_ok() {
    // A cap below every corpus graph yields an empty run and exit 0.
    let out = run(&["verify", "--max-n", "1", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["graphs"], 0);
}
