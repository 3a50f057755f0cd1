use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isospectral")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("JSON line")).collect()
}

fn data_lines(args: &[&str]) -> (i32, Vec<Value>) {
    let mut full = vec!["--no-meta"];
    full.extend_from_slice(args);
    let out = bin(&full);
    (out.status.code().expect("exit code"), json_lines(&out))
}

#[test]
fn build_octahedron() {
    let out = bin(&["build", "--builtin", "octahedron"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 2);
    assert!(lines[0]["meta"]["timestamp"].is_u64());
    assert_eq!(lines[1]["f_vector"], serde_json::json!([6, 12, 8]));
    assert_eq!(lines[1]["chi"], 2);
}

#[test]
fn build_five_dimensional_cross_polytope() {
    let (code, lines) = data_lines(&["build", "--builtin", "cross-polytope", "--dim", "5"]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["f_vector"], serde_json::json!([12, 60, 160, 240, 192, 64]));
}

#[test]
fn build_join_is_a_four_sphere() {
    let (code, lines) = data_lines(&["build", "--join", "octahedron,cycle:7"]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["f_vector"], serde_json::json!([13, 61, 134, 140, 56]));
    assert_eq!(lines[0]["chi"], 2);
    let out = bin(&["--no-meta", "verify", "--join", "octahedron,cycle:7", "--claim", "sphere:4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn build_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oct.json");
    let p = path.to_str().unwrap();
    let out = bin(&["build", "--builtin", "octahedron", "--refine", "1", "--output", p]);
    assert!(out.status.success());
    let written = fs::read_to_string(&path).unwrap();
    assert!(!written.contains("meta"));
    let (code, lines) = data_lines(&["build", "--input", p]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["f_vector"], serde_json::json!([26, 72, 48]));
}

#[test]
fn input_closure_is_enforced_unless_requested() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("open.json");
    fs::write(&path, r#"{"simplices": [[1,2,3]]}"#).unwrap();
    let p = path.to_str().unwrap();
    let out = bin(&["build", "--input", p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty() || String::from_utf8_lossy(&out.stdout).lines().count() == 1);
    let err: Value = serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["error"]["kind"], "not_closed");
    let (code, lines) = data_lines(&["build", "--input", p, "--close"]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["f_vector"], serde_json::json!([3, 3, 1]));
}

#[test]
fn graph_source_and_verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.txt");
    fs::write(&path, "1 2\n2 3\n3 1\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(bin(&["verify", "--graph", p, "--claim", "contractible"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "--builtin", "octahedron", "--claim", "sphere:2"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "--builtin", "cycle:4", "--claim", "sphere:2"]).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--builtin", "cycle:4", "--claim", "manifold:1"]).status.code(), Some(0));
    let (code, lines) = data_lines(&["verify", "--builtin", "octahedron*cycle:7", "--claim", "sphere:4", "--budget", "5"]);
    assert_eq!(code, 2);
    assert_eq!(lines[0]["status"], "budget_exhausted");
    assert_eq!(bin(&["verify", "--builtin", "octahedron", "--claim", "torus"]).status.code(), Some(3));
}

#[test]
fn spectrum_writes_one_csv_per_generation() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("c4");
    let prefix = prefix.to_str().unwrap();
    let (code, lines) = data_lines(&["spectrum", "--builtin", "cycle:4", "--refine", "6", "--output", prefix]);
    assert_eq!(code, 0);
    assert_eq!(lines.len(), 8);
    let last = fs::read_to_string(format!("{prefix}_gen6.csv")).unwrap();
    assert_eq!(last.lines().count(), 256);
    let report = &lines[7]["report"];
    assert!(report["arcsin_sup"].as_f64().unwrap() <= 0.05);
    assert_eq!(report["distances"].as_array().unwrap().len(), 6);
}

#[test]
fn spectrum_hodge_of_octahedron() {
    let (code, lines) = data_lines(&["dos", "--builtin", "octahedron", "--operator", "hodge"]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["size"], 26);
    assert_eq!(lines[0]["zero_count"], 2);
    assert!(lines[1]["report"]["arcsin_sup"].is_null());
}

#[test]
fn spectrum_size_guard() {
    let out = bin(&["spectrum", "--builtin", "complete:3", "--refine", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too_large"));
}

#[test]
fn deform_at_zero_is_the_identity() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("d");
    let prefix = prefix.to_str().unwrap();
    let (code, lines) = data_lines(&["deform", "--builtin", "octahedron", "--t", "0,1", "--output", prefix]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["spectral_drift"], 0.0);
    assert_eq!(lines[0]["substeps"], 0);
    assert!(lines[1]["spectral_drift"].as_f64().unwrap() <= 1e-8);
    assert_eq!(lines[1]["betti_ok"], true);
    let d0 = isospectral::io::parse_matrix_csv(&fs::read_to_string(format!("{prefix}_t0.csv")).unwrap()).unwrap();
    let oct = isospectral::builtins::octahedron();
    assert_eq!(d0, isospectral::spectral::dirac(&oct).matrix);
}

#[test]
fn levelset_reports() {
    let (code, lines) = data_lines(&["levelset", "--builtin", "octahedron*cycle:7", "--values", "3", "--seed", "1"]);
    assert_eq!(code, 0);
    let r = &lines[0]["report"];
    assert_eq!(r["status"], "manifold");
    assert_eq!(r["dim"], 2);
    assert_eq!(r["gauss_bonnet_ok"], true);
    assert_eq!(lines[0]["codimension"], 2);
    let (code, lines) = data_lines(&["levelset", "--builtin", "octahedron", "--constant", "1"]);
    assert_eq!(code, 0);
    assert_eq!(lines[0]["report"]["status"], "empty");
}

#[test]
fn stats_are_deterministic_across_thread_counts() {
    let args = ["stats", "--builtin", "cycle:4*cycle:4", "--values", "2", "--samples", "20", "--seed", "3", "--check"];
    let a = bin(&[&["--no-meta", "--threads", "1"][..], &args[..]].concat());
    let b = bin(&[&["--no-meta", "--threads", "4"][..], &args[..]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines = json_lines(&a);
    assert_eq!(lines.len(), 21);
    assert_eq!(lines[20]["summary"]["violations"], 0);
    assert_eq!(lines[20]["summary"]["gauss_bonnet_failures"], 0);
}

#[test]
fn unknown_flags_are_rejected() {
    let out = bin(&["build", "--builtin", "octahedron", "--bogus"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["error"]["kind"], "usage");
}

#[test]
fn deform_sixty_four_cell() {
    let start = std::time::Instant::now();
    let (code, lines) = data_lines(&["deform", "--builtin", "cross-polytope", "--dim", "5", "--t", "0.5"]);
    assert_eq!(code, 0);
    let r = &lines[0];
    assert!(r["spectral_drift"].as_f64().unwrap() <= 1e-8);
    assert!(r["band_leakage"].as_f64().unwrap() <= 1e-9);
    assert_eq!(r["betti_ok"], true);
    assert!(r["mckean_singer"].as_f64().unwrap().abs() <= 1e-8);
    assert!(start.elapsed() < std::time::Duration::from_secs(60));
}
