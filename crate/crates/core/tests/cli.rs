use std::path::Path;
use std::process::{Command, Output};

use qmask::io::load_state;
use qmask::state::MultiIndex;
use serde_json::Value;

const V4: &str = "1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n";
const W4: &str = "1 2 3 4\n4 3 2 1\n2 1 4 3\n3 4 1 2\n";

fn qmask(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmask")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

fn data_rows(csv: &str) -> Vec<&str> {
    csv.lines().filter(|l| !l.starts_with('#')).skip(1).collect()
}

#[test]
fn mask_bell_basis_zero() {
    let o = qmask(&["mask", "--scheme", "bell", "--d", "2", "--basis", "0"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let json: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["config"]["command"], "mask");
    let s = load_state(&text).unwrap();
    assert_eq!(s.nnz(), 4);
    for digits in [[0, 0, 0, 0], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 1, 1]] {
        assert!((s.amplitude(&MultiIndex::from(digits)).re - 0.5).abs() < 1e-15);
    }
    // 1-based digits on disk
    assert_eq!(json["amps"][0]["idx"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn mask_shor_coeffs() {
    let o = qmask(&["mask", "--scheme", "shor", "--coeffs", "1,0"]);
    assert_eq!(code(&o), 0);
    let s = load_state(&stdout(&o)).unwrap();
    assert_eq!(s.nnz(), 8);
    let a = 1.0 / (2.0 * 2f64.sqrt());
    assert!(s.iter().all(|(_, z)| (z.norm() - a).abs() < 1e-15));
}

#[test]
fn mask_mols_with_pair_files() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.txt", V4);
    let w = write(dir.path(), "w.txt", W4);
    let out = dir.path().join("psi.json");
    let pair = format!("{v},{w}");
    let o = qmask(&[
        "mask", "--scheme", "mols", "--pair", &pair, "--d", "4", "--coeffs", "1,0,0,0", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let s = load_state(&read(&out)).unwrap();
    assert_eq!(s.nnz(), 4);
    for k in 0..4 {
        assert!((s.amplitude(&MultiIndex::from([k, k, k])).re - 0.5).abs() < 1e-15);
    }
}

#[test]
fn mask_renormalizes_small_drift_and_rejects_large() {
    let o = qmask(&["mask", "--scheme", "bell", "--d", "2", "--coeffs", "0.6,0.8000001"]);
    assert_eq!(code(&o), 0);
    assert!(!o.stderr.is_empty());
    let o = qmask(&["mask", "--scheme", "bell", "--d", "2", "--coeffs", "1,1"]);
    assert_eq!(code(&o), 1);
    let o = qmask(&["mask", "--scheme", "bell", "--d", "2", "--coeffs", "1,x"]);
    assert_eq!(code(&o), 1);
    let o = qmask(&["mask", "--scheme", "bell", "--d", "2", "--coeffs", "0.6,0.8i"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_exit_codes() {
    let o = qmask(&["verify", "--scheme", "bell", "--d", "3"]);
    assert_eq!(code(&o), 0);
    let json: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["config"]["samples"], 100);

    assert_eq!(code(&qmask(&["verify", "--scheme", "embedded", "--d", "6"])), 0);

    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.txt", V4);
    let pair = format!("{v},{v}");
    let o = qmask(&["verify", "--scheme", "mols", "--pair", &pair]);
    assert_eq!(code(&o), 1);
    assert!(!o.stderr.is_empty());

    assert_eq!(code(&qmask(&["verify", "--scheme", "embedded", "--d", "5"])), 1);
    assert_eq!(code(&qmask(&["verify", "--scheme", "nope", "--d", "2"])), 1);
}

#[test]
fn verify_failure_exits_two() {
    // a tolerance below zero cannot be met
    let o = qmask(&["verify", "--scheme", "bell", "--d", "2", "--tol=-1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_csv_format() {
    let o = qmask(&["verify", "--scheme", "shor", "--format", "csv", "--samples", "5"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# config: "));
    assert_eq!(lines[1], "scheme,d,parties,local_dims,gram_dev,basis_dev,superpos_dev,pass");
    assert!(lines[2].starts_with("shor,2,9,2x2x2x2x2x2x2x2x2,"));
    assert!(lines[2].ends_with(",true"));
}

#[test]
fn latin_cyclic_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let v = dir.path().join("v.txt");
    let w = dir.path().join("w.txt");
    let outs = format!("{},{}", v.display(), w.display());
    assert_eq!(code(&qmask(&["latin", "cyclic", "--d", "5", "--out", &outs])), 0);
    let o = qmask(&["latin", "check", v.to_str().unwrap(), w.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("orthogonal: true"));

    let o = qmask(&["latin", "check", v.to_str().unwrap(), v.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("orthogonal: false"));

    assert_eq!(code(&qmask(&["latin", "cyclic", "--d", "4"])), 1);
}

#[test]
fn latin_check_order_four_pair_and_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.txt", V4);
    let w = write(dir.path(), "w.txt", W4);
    let o = qmask(&["latin", "check", &v, &w]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("orthogonal: true"));

    let bad = write(dir.path(), "bad.txt", "1 2\n1 2\n");
    assert_eq!(code(&qmask(&["latin", "check", &bad, &v])), 1);
}

#[test]
fn latin_search_small_orders() {
    let o = qmask(&["latin", "search", "--d", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("none exists (exhaustive"));
    let o = qmask(&["latin", "search", "--d", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("found certified pair"));
}

#[test]
fn report_rows() {
    let o = qmask(&["report", "--schemes", "bell", "--d", "2..4", "--samples", "10"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with(",true")));

    let o = qmask(&["report", "--schemes", "mols", "--d", "3,5,7", "--samples", "10"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.split(',').nth(2) == Some("3")));
}

#[test]
fn report_empty_and_error_rows() {
    let o = qmask(&["report"]);
    assert_eq!(code(&o), 0);
    assert!(data_rows(&stdout(&o)).is_empty());

    let o = qmask(&["report", "--schemes", "embedded", "--d", "3,4", "--samples", "5"]);
    assert_eq!(code(&o), 2);
    let text = stdout(&o);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("embedded,3,") && rows[0].ends_with(",ERROR"));
    assert!(rows[1].ends_with(",true"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&qmask(&["frobnicate"])), 1);
    assert_eq!(code(&qmask(&["mask", "--scheme", "bell", "--d", "2"])), 1);
    assert_eq!(code(&qmask(&["--help"])), 0);
}
