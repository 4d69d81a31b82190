use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn triloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn field(v: &Value, key: &str) -> f64 {
    v[key].as_f64().unwrap_or_else(|| panic!("missing {key}"))
}

#[test]
fn compute_w_state() {
    let out = triloc(&["compute", "--family", "w"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((field(&v, "s_svetlichny") - 4.35).abs() <= 0.01);
    assert!((v["chsh"]["ab"].as_f64().unwrap() - 4.0 * 2f64.sqrt() / 3.0).abs() < 1e-12);
    assert_eq!(v["optimizer"]["seed"], 42);
    assert_eq!(v["svetlichny"]["best_settings"]["alpha"].as_array().unwrap().len(), 4);
}

#[test]
fn compute_depolarized_ghz() {
    let out = triloc(&[
        "compute", "--family", "ghz", "--p", "0.8", "--theta", "pi/4", "--theta3", "pi/2",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((field(&v, "s_svetlichny") - 4.5255).abs() <= 5e-3);
    assert!((field(&v, "s_bound") - 4.5255).abs() <= 1e-3);
}

#[test]
fn compute_ground_state() {
    let v = json(&triloc(&["compute", "--family", "ground"]));
    assert!(v["pi_tangle"]["pi_abc"].as_f64().unwrap().abs() <= 1e-10);
}

#[test]
fn custom_state_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rho.json");
    let mut re = vec![vec![0.0; 8]; 8];
    for r in [0, 7] {
        for c in [0, 7] {
            re[r][c] = 0.5;
        }
    }
    let doc = serde_json::json!({ "dim": 8, "re": re, "im": vec![vec![0.0; 8]; 8] });
    fs::write(&path, doc.to_string()).unwrap();
    let out = triloc(&["compute", "--family", "custom", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((field(&v, "s_svetlichny") - 4.0 * 2f64.sqrt()).abs() < 1e-6);
}

#[test]
fn bad_inputs_exit_with_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"dim": 2, "re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]}"#).unwrap();
    let out = triloc(&["compute", "--family", "custom", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = triloc(&["compute", "--family", "custom", "--file", "/nonexistent/rho.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = triloc(&["compute", "--family", "ghz", "--p", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_preset_exits_with_code_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = triloc(&["figure", "fig7", "--output", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

fn dynamics(dir: &Path, name: &str) -> String {
    let out = triloc(&[
        "dynamics", "--r", "0.1,20", "--tau-max", "1", "--steps", "20",
        "--metrics", "svetlichny,survival", "--output", dir.to_str().unwrap(), "--name", name,
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    fs::read_to_string(dir.join(format!("{name}.csv"))).unwrap()
}

#[test]
fn sweeps_are_byte_identical_and_keep_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    let a = dynamics(dir.path(), "a");
    let b = dynamics(dir.path(), "b");
    assert_eq!(a, b);
    let mut lines = a.lines();
    assert_eq!(
        lines.next().unwrap(),
        "tau,r,delta,s_svetlichny,s_bound,chsh_ab,pi_tangle,survival,error"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 42);
    assert!(rows.iter().all(|r| r.len() == 9 && r[5].is_empty() && r[6].is_empty()));
    assert_eq!(rows[0][3], "4.35464842863");

    let meta: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["seed"], 42);
    assert_eq!(meta["rows"], 42);
    assert_eq!(meta["error_rows"], 0);
    assert!(meta["tool_version"].is_string());
    assert!(meta["wall_clock_seconds"].as_f64().unwrap() >= 0.0);
    assert_eq!(meta["config"]["r_values"][1], 20.0);
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, name: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_triloc"))
            .env("TRILOC_THREADS", threads)
            .args(["zeno", "--measure-interval", "0.01", "--r", "20", "--tau-max", "0.5"])
            .args(["--steps", "10", "--metrics", "all", "--name", name, "--output"])
            .arg(dir.path())
            .output()
            .unwrap();
        assert!(out.status.success());
        fs::read_to_string(dir.path().join(format!("{name}.csv"))).unwrap()
    };
    assert_eq!(run("1", "one"), run("3", "three"));
}

#[test]
fn zeno_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = triloc(&[
        "zeno", "--measure-interval", "0.001", "--r", "20", "--tau-max", "1", "--steps", "4",
        "--metrics", "survival", "--format", "json", "--output", dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let rows: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("zeno.json")).unwrap()).unwrap();
    let last = &rows.as_array().unwrap()[4];
    let expected = (-0.4f64).exp();
    assert!((last["survival"].as_f64().unwrap() - expected).abs() < 2e-3);
    assert!(last["s_svetlichny"].is_null());
}

#[test]
fn table1_preset() {
    let dir = tempfile::tempdir().unwrap();
    let out = triloc(&["figure", "table1", "--output", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "p,theta,theta3,s_svetlichny,s_bound");
    let first: Vec<f64> = lines.next().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(first[0], 1.0);
    assert!((first[3] - 4.8990).abs() <= 5e-3);
    assert!((first[4] - 4.8990).abs() <= 1e-3);
    assert_eq!(text.lines().count(), 7);
    assert!(dir.path().join("table1.meta.json").exists());
}

#[test]
fn fig2_preset_shows_no_chsh_violation() {
    let dir = tempfile::tempdir().unwrap();
    let out = triloc(&["figure", "fig2", "--starts", "8", "--output", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    for name in ["fig2_r20", "fig2_r0.1"] {
        let mut reader = csv::Reader::from_path(dir.path().join(format!("{name}.csv"))).unwrap();
        let mut first = true;
        for rec in reader.records() {
            let rec = rec.unwrap();
            let chsh: f64 = rec[5].parse().unwrap();
            assert!(chsh <= 2.0 + 1e-12, "{name}: {chsh}");
            if first {
                let s: f64 = rec[3].parse().unwrap();
                assert!((s - 4.35).abs() <= 0.01);
                first = false;
            }
        }
    }
}

#[test]
fn validate_passes_and_negative_control_fails() {
    let out = triloc(&["validate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);

    let reseeded = triloc(&["validate", "--seed", "7"]);
    assert_eq!(reseeded.status.code(), Some(0));

    let out = triloc(&["validate", "--perturb-bound"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("table1[3].bound"));
}
