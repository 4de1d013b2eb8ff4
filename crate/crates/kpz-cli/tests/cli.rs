//! End-to-end runs of the `kpz` binary.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

// Same values as the regression pins of the Tracy-Widom evaluator.
const TW_PINS: [(f64, f64); 3] = [(-2.0, 0.413_224_142_505), (0.0, 0.969_372_828_355), (2.0, 0.999_887_553_698)];

fn kpz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpz")).args(args).env_remove("KPZ_LOG").output().expect("spawn kpz")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).expect("valid schema")
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn read_json(p: &Path) -> Value {
    serde_json::from_slice(&std::fs::read(p).unwrap()).unwrap()
}

#[test]
fn help_exits_zero() {
    let o = kpz(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for sub in ["rsk", "grsk", "lpp-dist", "polymer-laplace", "tw-cdf", "airy", "simulate", "verify"] {
        assert!(s.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(kpz(&["tw-cdf", "--x", "0", "--bogus"]).status.code(), Some(1));
    assert_eq!(kpz(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(kpz(&["rsk", "--matrix", "1,2;3"]).status.code(), Some(1));
    assert_eq!(kpz(&["--threads", "0", "airy", "--x", "0"]).status.code(), Some(1));
    assert_eq!(kpz(&["simulate", "--model", "q-rsk", "--x", "1", "--q", "1.5", "--time", "1"]).status.code(), Some(1));
}

#[test]
fn tw_cdf_table_matches_pins() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tw.csv");
    let o = kpz(&["tw-cdf", "--x", "-2", "--x", "0", "--x", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut r = csv::Reader::from_path(&out).unwrap();
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), ["x", "F", "delta"]);
    let rows: Vec<csv::StringRecord> = r.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    for (row, (x, f)) in rows.iter().zip(TW_PINS) {
        let got_x: f64 = row[0].parse().unwrap();
        let got: f64 = row[1].parse().unwrap();
        assert_eq!(got_x, x);
        assert!((got - f).abs() < 1e-6, "F({x}) = {got}, pinned {f}");
        // 15 significant digits in scientific notation.
        let mantissa = row[1].split('e').next().unwrap();
        assert_eq!(mantissa.chars().filter(|c| c.is_ascii_digit()).count(), 15, "{}", &row[1]);
    }
    let manifest = read_json(&kpz_cli::manifest_path(&out));
    assert_valid(&schema("run-manifest.schema.json"), &manifest);
    assert_eq!(manifest["subcommand"], "tw-cdf");
    assert_eq!(manifest["seed"], 0);
    assert_eq!(manifest["params"]["x"], serde_json::json!([-2.0, 0.0, 2.0]));
}

#[test]
fn rsk_ones_round_trip() {
    let o = kpz(&["rsk", "--matrix", "3x3-ones", "--round-trip"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("shape: 5 3 1"), "{s}");
    assert!(s.contains("greene: 5 3 1 (agrees)"), "{s}");
    assert!(s.contains("identity: true"), "{s}");

    let j = kpz(&["rsk", "--matrix", "perm:3,1,2", "--backend", "insertion", "--format", "json"]);
    assert_eq!(j.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["shape"], serde_json::json!([2, 1]));
    assert_eq!(v["greene_shape"], v["shape"]);
}

#[test]
fn grsk_round_trip() {
    let o = kpz(&["grsk", "--matrix", "1.5,0.5;2,1", "--round-trip", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["round_trip_max_rel_error"].as_f64().map(|e| e < 1e-12), Some(true));
    // Top entry of Z is the polymer partition function: paths 1.5*0.5*1 and 1.5*2*1.
    let z11 = v["z"][1][0].as_f64().unwrap();
    assert!((z11 - 3.75).abs() < 1e-12, "{z11}");
}

#[test]
fn same_arguments_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, args: &[&str]| {
        let out = dir.path().join(name);
        let mut argv = args.to_vec();
        argv.extend(["--out", out.to_str().unwrap()]);
        let o = kpz(&argv);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let m = read_json(&kpz_cli::manifest_path(&out));
        (std::fs::read(&out).unwrap(), m)
    };
    let lpp = ["--seed", "3", "lpp-dist", "--p", "0.3", "--p", "0.5", "--q", "0.4", "--q", "0.2", "--u-max", "5", "--samples", "5000"];
    let (a, ma) = run("a.csv", &lpp);
    let (b, mb) = run("b.csv", &lpp);
    assert_eq!(a, b);
    assert_eq!(ma["payload_sha256"], mb["payload_sha256"]);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("u,P_schur,P_fredholm,P_mc,mc_stderr\n"), "{text}");
    assert_eq!(text.lines().count(), 7);

    let sim = ["--seed", "11", "simulate", "--model", "q-whittaker", "--x", "1", "--x", "0.5", "--x", "2", "--q", "0.3", "--time", "3"];
    let (s1, m1) = run("s1.json", &sim);
    let (s2, _) = run("s2.json", &sim);
    assert_eq!(s1, s2);
    assert_eq!(m1["seed"], 11);
    let mut other = sim;
    other[1] = "12";
    let (s3, _) = run("s3.json", &other);
    assert_ne!(s1, s3);

    let traj: Value = serde_json::from_slice(&s1).unwrap();
    assert_valid(&schema("trajectory.schema.json"), &traj);
    assert_valid(&schema("run-manifest.schema.json"), &m1);
    assert_eq!(traj["run"]["seed"], 11);
    assert!(!traj["events"].as_array().unwrap().is_empty());
}

#[test]
fn trajectory_schema_rejects_garbage() {
    let v = schema("trajectory.schema.json");
    assert!(!v.is_valid(&serde_json::json!({"horizon": 1.0})));
    assert!(!v.is_valid(&serde_json::json!({
        "run": {"subcommand": "simulate", "params": {}, "seed": 0, "versions": {}},
        "horizon": 1.0, "initial": [[0]], "events": []
    })));
}

#[test]
fn simulate_csv_lists_events() {
    let o = kpz(&["--format", "csv", "simulate", "--model", "poisson-rsk", "--x", "1", "--x", "1", "--time", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("time,level,index,pattern"));
    assert_eq!(lines.next(), Some("0.00000000000000e0,,,0|0 0"));
    // Manifest echoed on stderr when there is no output file.
    let err = String::from_utf8(o.stderr).unwrap();
    let m: Value = serde_json::from_str(err.lines().last().unwrap()).unwrap();
    assert_valid(&schema("run-manifest.schema.json"), &m);
}

#[test]
fn airy_values() {
    let o = kpz(&["--format", "json", "airy", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let ai = v[0]["ai"].as_f64().unwrap();
    assert!((ai - 0.355_028_053_887_817_2).abs() < 1e-12);
}

#[test]
fn corrupted_local_move_fails_named_criterion() {
    let o = kpz(&["verify", "fast", "--corrupt-local-move", "--only", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("greene-schensted"), "{err}");
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], false);
    assert_eq!(report["criteria"][0]["name"], "greene-schensted");
}

#[test]
fn log_level_from_environment() {
    let quiet = kpz(&["airy", "--x", "1"]);
    assert!(!String::from_utf8_lossy(&quiet.stderr).contains("INFO"));
    let loud = Command::new(env!("CARGO_BIN_EXE_kpz")).args(["airy", "--x", "1"]).env("KPZ_LOG", "info").output().unwrap();
    assert!(String::from_utf8_lossy(&loud.stderr).contains("airy finished"));
}
