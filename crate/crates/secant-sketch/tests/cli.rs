use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secant-sketch")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const IDENTITY: &str = r#"{"family":"identity","N":8}"#;

#[test]
fn subgaussian_bound_from_beta() {
    let out = cli(&["bounds", "--thm", "1.3", "--beta", "45272692", "--eps", "0.1", "--p", "0.01"]);
    assert_eq!(out.status.code(), Some(0));
    let m = json(&out)["m_required"].as_f64().unwrap();
    assert!((4226.0..=4227.0).contains(&m.ceil()), "{m}");
}

#[test]
fn bound_from_catalog_manifold_matches_explicit_beta() {
    let by_name = json(&cli(&["bounds", "--thm", "subgaussian", "--manifold", "sphere2", "--eps", "0.1", "--p", "0.01"]));
    let beta = by_name["inputs"]["beta"].as_f64().unwrap();
    let explicit = json(&cli(&["bounds", "--thm", "subgaussian", "--beta", &beta.to_string(), "--eps", "0.1", "--p", "0.01"]));
    assert_eq!(by_name["m_required"], explicit["m_required"]);
}

#[test]
fn infeasible_bound_exit_code() {
    let args = ["bounds", "--thm", "block", "--beta", "1e10", "--eps", "0.01", "--p", "0.1", "--n", "4096"];
    assert_eq!(cli(&args).status.code(), Some(4));
    let mut warn = args.to_vec();
    warn.push("--warn-infeasible");
    let out = cli(&warn);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["feasible"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["bounds", "--thm", "sors", "--eps", "0.1", "--p", "0.1"]).status.code(), Some(2));
    assert_eq!(cli(&["bounds", "--thm", "nonsense", "--eps", "0.1", "--p", "0.1"]).status.code(), Some(2));
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cli(&["bench", "--n", "1024"]).status.code(), Some(2));
    assert_eq!(cli(&["--help"]).status.code(), Some(0));
}

#[test]
fn identity_has_zero_distortion_and_ric() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("p.csv");
    let p = pts.to_str().unwrap();
    assert!(cli(&["sample", "--geometry", "gaussian", "--n", "8", "--count", "30", "--out", p]).status.success());
    let out = cli(&["distort", "--op", IDENTITY, "--points", p, "--eps", "0.01", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["max_sq_err"], 0.0);
    assert_eq!(v["report"]["secants"], 435);
    assert_eq!(v["jl_verdict"], true);
    assert_eq!(v["oracle"]["max_abs_diff"], 0.0);

    let v = json(&cli(&["rip", "--op", IDENTITY, "--s", "3"]));
    assert_eq!(v["ric"][0]["ric"], 0.0);
    assert_eq!(v["ric"][0]["supports"], 56);
}

#[test]
fn enumeration_guard_exit_code() {
    let out = cli(&["rip", "--op", r#"{"family":"identity","N":100}"#, "--s", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn distortion_from_dataset_spec() {
    let op = r#"{"family":"sors","N":64,"m":32,"transform":"dct2","seed":1}"#;
    let ds = r#"{"geometry":{"kind":"sphere","d":2},"N":64,"count":40,"seed":5}"#;
    let v = json(&cli(&["distort", "--op", op, "--dataset", ds, "--oracle"]));
    let e = v["report"]["max_norm_rel_err"].as_f64().unwrap();
    assert!(e > 0.0 && e < 1.0);
    assert!(v["oracle"]["max_abs_diff"].as_f64().unwrap() < 1e-10);
}

#[test]
fn rip_success_rate() {
    let op = r#"{"family":"gaussian","N":16,"m":12}"#;
    let v = json(&cli(&["rip", "--op", op, "--s", "1..2", "--trials", "40", "--eps", "0.99", "--seed", "3"]));
    let rows = v["success"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        let est = &r["estimate"];
        assert_eq!(est["trials"], 40);
        assert!(est["lower"].as_f64().unwrap() <= est["rate"].as_f64().unwrap());
    }
}

#[test]
fn cover_reports_and_empirical_dominance() {
    let out = cli(&["cover", "sphere2", "--eps", "0.3,0.5", "--empirical", "--samples", "2000"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let rows = v["bounds"].as_array().unwrap();
    assert!((rows[1]["cover"].as_f64().unwrap() - 64.67).abs() < 0.01);
    assert!(rows.iter().all(|r| r["dominates"] == true));
    assert!((rows[0]["width_bound"].as_f64().unwrap() - 57.3).abs() < 0.05);

    let v = json(&cli(&["cover", "disk2", "--eps", "0.5"]));
    assert!(v["bounds"][0]["cover"].as_f64().unwrap() <= 16.0 + 2.0 * std::f64::consts::PI * 8.1);
    assert!(cli(&["cover", "klein-bottle", "--eps", "0.5"]).status.code() == Some(2));
}

#[test]
fn bench_csv_is_reproducible_and_config_merges() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bench.json");
    std::fs::write(&cfg, r#"{"N":[64,256],"methods":["sors","block"],"m":{"fixed":8},"m1":{"fixed":8},"set_size":10,"repetitions":3}"#).unwrap();
    let c = cfg.to_str().unwrap();
    let a = cli(&["bench", "--config", c, "--threads", "1", "--no-timing", "--seed", "9"]);
    let b = cli(&["bench", "--config", c, "--threads", "1", "--no-timing", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    // 2 sizes x 2 methods x (3 reps + 1 aggregate) plus version and header lines
    assert_eq!(text.lines().count(), 2 + 16);
    assert!(!text.contains("time_ns"));

    // a flag overrides the config file
    let c2 = cli(&["bench", "--config", c, "--reps", "1", "--no-timing", "--threads", "1"]);
    assert_eq!(String::from_utf8(c2.stdout).unwrap().lines().count(), 2 + 8);
}

#[test]
fn sample_formats() {
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("s.bin");
    let out = cli(&["sample", "--geometry", "disk2", "--n", "5", "--count", "10", "--seed", "4", "--out", bin.to_str().unwrap()]);
    assert!(out.status.success());
    let pts = secant_sketch::io::load_points(&bin, None).unwrap();
    assert_eq!((pts.len(), pts.dim()), (10, 5));
    let spec = r#"{"geometry":{"kind":"disk","d":2},"N":5,"count":10,"seed":4}"#;
    let csv = cli(&["sample", "--spec", spec]);
    let again = secant_sketch::io::read_csv(&csv.stdout[..]).unwrap();
    assert_eq!(again, pts);
}
