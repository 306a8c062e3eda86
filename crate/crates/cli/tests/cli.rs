use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_anneal-threshold");

const CONFIG: &str = r#"{
  "schema_version": 1,
  "system": {
    "n_qubits": 2,
    "problem": {"fields": [0.3, -0.5], "couplings": [{"i": 0, "j": 1, "value": 0.8}]}
  },
  "schedule": {"total_time": 2.0},
  "error_model": {
    "family": {"kind": "coupling_deviation", "couplings": [{"i": 0, "j": 1, "value": 0.05}]},
    "envelope": {"kind": "step", "breaks": [0.5], "values": [1.0, 0.0]}
  },
  "measurement": {"shots": 300, "seed": 4},
  "sweep": {"error_scale": [1.0, 3.0]}
}"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn cli(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("ANNEAL_THRESHOLD_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_reports_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.json", CONFIG);
    let out = cli(&["validate", &path]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("ok: 2 qubits, 2 sweep point(s)"));
    assert!(text.contains("default: system.driver"));
}

#[test]
fn validate_rejects_bad_configs_with_field_paths() {
    let dir = tempfile::tempdir().unwrap();
    let bad = CONFIG.replace("\"j\": 1, \"value\": 0.8", "\"j\": 5, \"value\": 0.8");
    let out = cli(&["validate", &write(dir.path(), "bad.json", &bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error[semantic] at system.problem.couplings[0].j"));

    let out = cli(&[
        "validate",
        &write(dir.path(), "broken.json", "{\n\"schema_version\" 1}"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[parse]"));
}

#[test]
fn run_writes_identical_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.json", CONFIG);
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out_dir in [&a, &b] {
        let out = cli(&["run", &path, "--out", out_dir.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert!(stdout(&out).contains("0 failed"));
    }
    let csv = fs::read(a.join("summary.csv")).unwrap();
    assert_eq!(csv, fs::read(b.join("summary.csv")).unwrap());
    assert_eq!(csv.iter().filter(|&&c| c == b'\n').count(), 3);
    assert!(a.join("report.json").exists());
}

#[test]
fn format_steps_and_seed_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.json", CONFIG);
    let out_dir = dir.path().join("out");
    let out = cli(&[
        "run",
        &path,
        "--out",
        out_dir.to_str().unwrap(),
        "--format",
        "csv",
        "--steps",
        "600",
        "--seed",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(out_dir.join("summary.csv").exists());
    assert!(!out_dir.join("report.json").exists());
    let csv = fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert!(csv
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("600")));

    // 601 steps cannot place a grid point at the envelope jump
    let out = cli(&[
        "run",
        &path,
        "--out",
        out_dir.to_str().unwrap(),
        "--steps",
        "601",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("integrator.steps"));
}

#[test]
fn environment_sets_default_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.json", CONFIG);
    let env_dir = dir.path().join("from-env");
    let out = Command::new(BIN)
        .args(["run", &path, "--format", "csv"])
        .env("ANNEAL_THRESHOLD_OUT_DIR", &env_dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(env_dir.join("summary.csv").exists());

    // the command line wins over the environment
    let flag_dir = dir.path().join("from-flag");
    let out = Command::new(BIN)
        .args([
            "run",
            &path,
            "--format",
            "csv",
            "--out",
            flag_dir.to_str().unwrap(),
        ])
        .env("ANNEAL_THRESHOLD_OUT_DIR", dir.path().join("unused"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(flag_dir.join("summary.csv").exists());
    assert!(!dir.path().join("unused").exists());
}

#[test]
fn wrong_epsilon_override_is_a_loud_failure() {
    // The ideal state leaks well away from |0>, so claiming epsilon = 0
    // makes the amplitude bound false and the run must exit with status 1.
    let config = r#"{
      "schema_version": 1,
      "system": {"n_qubits": 1, "problem": {"fields": [1.0]}},
      "schedule": {"total_time": 0.5},
      "error_model": {"family": {"kind": "static_field_bias", "axis": "x", "strengths": [0.01]}},
      "measurement": {"target": 0, "epsilon": 0.0}
    }"#;
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "wrong.json", config);
    let out = cli(&[
        "run",
        &path,
        "--out",
        dir.path().join("o").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("1 failed"));
}

#[test]
fn oracle_selftest_passes() {
    let out = cli(&["oracle-selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().count() >= 4);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
