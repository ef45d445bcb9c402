use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn girthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthlab")).args(args).env_remove("GIRTHLAB_WORKERS").output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = girthlab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Asserts a failure with the given exit code and one JSON line on stderr.
fn fails_with(args: &[&str], code: i32) -> Value {
    let out = girthlab(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["code"], code);
    v
}

fn fixture() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/appendix_p1e-5.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn petersen_girth() {
    let v = ok_json(&["girth", "--named", "petersen"]);
    assert_eq!((v["girth"].as_u64(), v["odd_girth"].as_u64()), (Some(5), Some(5)));
    assert_eq!(v["config"]["graph"]["named"], "petersen");
    let h = ok_json(&["girth", "--named", "heawood", "--witness"]);
    assert_eq!(h["girth"], 6);
    assert!(h["odd_girth"].is_null());
    assert_eq!(h["girth_witness"].as_array().unwrap().len(), 6);
}

#[test]
fn solve_matches_the_reference_program() {
    let v = ok_json(&["solve", "--p1", "1e-5", "--p2", "1e-5", "--threshold", "1e-6", "--stride", "10000"]);
    let fx = fixture();
    let last = fx["rounds"].as_array().unwrap().last().unwrap();
    assert_eq!(v["result"]["K"], fx["final_round"]);
    let (r, r_ref) = (v["result"]["r_K"].as_f64().unwrap(), last["r"].as_f64().unwrap());
    assert!(((r - r_ref) / r_ref).abs() <= 1e-9, "{r} vs {r_ref}");
    assert_eq!(v["result"]["termination"], "below_threshold");
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace[0]["k"], 1);
    assert_eq!(trace.last().unwrap()["k"], fx["final_round"]);
    assert_eq!(trace.len(), 32);
}

#[test]
fn solve_formats_and_precisions() {
    let out = girthlab(&["solve", "--p1", "1e-2", "--p2", "1e-2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# config {"));
    assert!(lines.next().unwrap().starts_with("# result {\"K\":"));
    assert_eq!(lines.next().unwrap(), "k,w,b,r,w0,w1,w2,w3,q1,q2,q3");
    let f64_run = ok_json(&["solve", "--p1", "1e-2", "--p2", "1e-2"]);
    let dd_run = ok_json(&["solve", "--p1", "1e-2", "--p2", "1e-2", "--precision", "dd"]);
    let (a, b) = (f64_run["result"]["r_K"].as_f64().unwrap(), dd_run["result"]["r_K"].as_f64().unwrap());
    assert!((a - b).abs() < 1e-10);
}

#[test]
fn error_exit_codes() {
    let v = fails_with(&["solve", "--p1", "0", "--p2", "1e-5", "--threshold", "1e-6"], 3);
    assert_eq!(v["error"], "numerical");
    fails_with(&["solve", "--p1", "1.5", "--p2", "0.1"], 2);
    let v = fails_with(&["simulate", "--named", "petersen", "--p1", "0.1", "--p2", "0.1", "--rounds", "3"], 2);
    assert!(v["message"].as_str().unwrap().contains("--seed"));
    fails_with(&["girth", "--named", "nonesuch"], 2);
    fails_with(&["girth", "--input", "/nonexistent/graph.txt"], 2);
    fails_with(&["oddgirth", "--named", "k4", "--g", "5", "--trials", "10", "--seed", "1"], 2);
    fails_with(&["oddgirth", "--named", "petersen", "--g", "6", "--trials", "10", "--seed", "1"], 2);
    fails_with(&["maxcut", "--named", "k4", "--set", "0,1"], 2);
    fails_with(&["generate", "--n", "7", "--seed", "1"], 2);
    fails_with(&["coverage", "--named", "k4", "--p1", "0.2", "--p2", "0.2", "--rounds", "3", "--trials", "0", "--seed", "1"], 2);
    assert!(girthlab(&["--help"]).status.success());
}

#[test]
fn malformed_edge_list_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "4 2\n0 1\n3 x\n").unwrap();
    let v = fails_with(&["girth", "--input", path.to_str().unwrap()], 2);
    assert!(v["message"].as_str().unwrap().starts_with("line 3:"), "{v}");
}

#[test]
fn generate_then_measure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let p = path.to_str().unwrap();
    let out = girthlab(&["generate", "--n", "2000", "--seed", "4", "--target-girth", "8", "--output", p]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# girthlab generate {"));
    let v = ok_json(&["girth", "--input", p]);
    assert!(v["girth"].as_u64().unwrap() >= 8);
    assert_eq!(v["n"], 2000);
    // An unreachable target is a warning, not a failure.
    let out = girthlab(&["generate", "--n", "8", "--seed", "1", "--target-girth", "5", "--max-steps", "100"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("target_girth_not_reached"));
}

#[test]
fn maxcut_pipeline_on_petersen() {
    let v = ok_json(&["maxcut", "--named", "petersen", "--set", "0,2,8,9", "--exact"]);
    assert_eq!(v["cut"]["size"], 12);
    assert_eq!(v["exact"]["alpha"], 4);
    assert_eq!(v["exact"]["alpha_cut"], 12);
    assert_eq!(v["exact"]["max_cut"]["size"], 12);
    let s = ok_json(&["maxcut", "--named", "petersen", "--p1", "0.3", "--p2", "0.3", "--rounds", "20", "--seed", "2"]);
    assert_eq!(s["source"], "simulated");
    assert_eq!(s["cut"]["size"].as_u64().unwrap(), 3 * s["set_size"].as_u64().unwrap());
}

/// Every stochastic subcommand, run twice with the same configuration.
fn stochastic_commands() -> Vec<Vec<&'static str>> {
    vec![
        vec!["generate", "--n", "500", "--seed", "9", "--target-girth", "7"],
        vec!["simulate", "--named", "tutte_coxeter", "--p1", "0.1", "--p2", "0.2", "--rounds", "6", "--seed", "5", "--red-set"],
        vec!["simulate", "--named", "petersen", "--p1", "0.1", "--p2", "0.2", "--rounds", "6", "--seed", "5", "--trials", "300", "--format", "csv"],
        vec!["coverage", "--named", "heawood", "--p1", "0.1", "--p2", "0.2", "--rounds", "8", "--trials", "3000", "--seed", "5", "--per-vertex"],
        vec!["oddgirth", "--named", "petersen", "--g", "5", "--trials", "3000", "--seed", "5", "--per-vertex"],
        vec!["maxcut", "--named", "pappus", "--p1", "0.2", "--p2", "0.2", "--rounds", "8", "--seed", "5"],
    ]
}

#[test]
fn stochastic_output_is_byte_identical() {
    for args in stochastic_commands() {
        let a = girthlab(&args);
        let b = girthlab(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let run = |workers: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_girthlab"))
            .args(["coverage", "--named", "mcgee", "--p1", "0.1", "--p2", "0.2", "--rounds", "8", "--trials", "2000"])
            .args(["--seed", "3", "--per-vertex"])
            .env("GIRTHLAB_WORKERS", workers)
            .output()
            .unwrap();
        assert!(out.status.success());
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["config"]["workers"].as_u64().unwrap().to_string(), workers);
        v.as_object_mut().unwrap().remove("config");
        v
    };
    assert_eq!(run("1"), run("4"));
}
