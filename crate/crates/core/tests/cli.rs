use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_hilbert-spectra");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("HILBERT_SPECTRA_THREADS").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn spectrum_json_for_small_quantized_matrix() {
    let out = run(&["spectrum", "--family", "alt-quant", "--n", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["meta"]["command"], "spectrum");
    let rows = doc["rows"].as_array().unwrap();
    let im: Vec<f64> = rows.iter().map(|r| r["im"].as_f64().unwrap()).collect();
    let r3 = 3f64.sqrt();
    assert!((im[0] + r3).abs() < 1e-12 && im[1] == 0.0 && (im[2] - r3).abs() < 1e-12);
    assert!(rows.iter().all(|r| r["re"].as_f64().unwrap() == 0.0));
}

#[test]
fn verify_quantized_spectrum_range() {
    let out = run(&["verify", "--theorem", "4", "--n", "1..128"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,max_eigenvalue_gap,pass");
    assert_eq!(lines.count(), 128);
}

#[test]
fn failed_checks_exit_one() {
    let out = run(&["verify", "--theorem", "alt-quant", "--n", "3..5", "--tol=-1"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("false"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["trace", "--family", "alt", "--n", "5..2"])), 2);
    assert_eq!(code(&run(&["build", "--family", "osc-cos", "--n", "4", "--theta", "2.0"])), 2);
    assert_eq!(code(&run(&["conjecture", "--which", "3", "--n", "10"])), 2);
    let threads = Command::new(BIN)
        .args(["sweep", "--task", "radius", "--n", "3"])
        .env("HILBERT_SPECTRA_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&threads), 2);
}

#[test]
fn io_and_parse_errors_exit_three() {
    assert_eq!(code(&run(&["zeta", "--zeros", "missing.txt"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "21.0\n14.1\n").unwrap();
    let out = run(&["zeta", "--op", "zerosum", "--zeros", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn output_file_matches_stdout_and_is_deterministic() {
    let args = ["sweep", "--task", "split", "--n", "20,40", "--theta", "0.3,pi/4", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let serial = Command::new(BIN).args(args).env("HILBERT_SPECTRA_THREADS", "1").output().unwrap();
    assert_eq!(serial.stdout, first.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut with_file: Vec<&str> = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    assert_eq!(code(&run(&with_file)), 0);
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);

    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    let keys: Vec<(f64, u64)> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["theta"].as_f64().unwrap(), r["n"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(keys, sorted);
}

#[test]
fn json_floats_round_trip_bit_exactly() {
    let out = run(&["spectrum", "--family", "alt", "--n", "9", "--format", "json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let a = hilbert_spectra::zoo::build(&hilbert_spectra::zoo::MatrixFamily::<f64>::alternating(9)).unwrap();
    let s = hilbert_spectra::linalg::skew_spectrum(&a, 1e-10).unwrap();
    for (row, z) in doc["rows"].as_array().unwrap().iter().zip(&s.eigenvalues) {
        assert_eq!(row["im"].as_f64().unwrap().to_bits(), z.im.to_bits());
    }
}

#[test]
fn trace_csv_schema() {
    let out = run(&["trace", "--family", "osc-sin", "--n", "4", "--theta", "pi/4"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "n,family,trace_sq_matrix,trace_sq_closed,limit_value,normalized");
}

#[test]
fn build_exports_the_matrix() {
    let out = run(&["build", "--family", "sym-quant", "--n", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["kind"], "sym-quant");
    assert_eq!(doc["entries"], serde_json::json!([[1.0, 0.0], [0.0, -1.0]]));
}

#[test]
fn zeta_operations() {
    let cat = run(&["zeta", "--op", "catalan", "--eps", "1e-10"]);
    assert_eq!(code(&cat), 0);
    assert!(String::from_utf8_lossy(&cat.stdout).contains("9.1596559"));
    let identity = run(&["zeta", "--op", "identity", "--format", "json"]);
    assert_eq!(code(&identity), 0);
    let doc: Value = serde_json::from_slice(&identity.stdout).unwrap();
    let row = &doc["rows"][0];
    assert!(row["truncation_error"].as_f64().unwrap() > row["gap"].as_f64().unwrap());
    let prime = run(&["zeta", "--op", "primelimit", "--n", "11,21"]);
    assert_eq!(code(&prime), 0);
    assert_eq!(code(&run(&["zeta", "--op", "primelimit", "--n", "10"])), 2);
}

#[test]
fn szego_indicator_needs_bounds() {
    assert_eq!(code(&run(&["szego", "--case", "sin", "--F", "indicator", "--n", "50", "--theta", "0.5"])), 2);
    let out = run(&["szego", "--case", "sin", "--F", "indicator", "--a", "2.6", "--b", "3.7", "--n", "50", "--theta", "0.5"]);
    assert_eq!(code(&out), 0);
}
