//! Acceptance run: every criterion of the full suite, one line each.
//!
//! Criterion 12 is also checked through the binary: `kpz verify fast` must
//! pass in under two minutes, and two runs with the same arguments must
//! write byte-identical files.

use kpz_cli::cli::Suite;
use kpz_cli::output::sha256_hex;
use kpz_cli::verify::{run_criterion, CriterionOutcome, VerifyOptions};
use std::process::Command;
use std::time::Instant;

const FAST_SUITE_LIMIT_SECS: f64 = 120.0;

fn kpz() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_kpz"));
    c.env_remove("KPZ_LOG");
    c
}

/// Binary-level part of criterion 12.
fn reproducibility_via_binary() -> Vec<String> {
    let mut failures = Vec::new();
    let start = Instant::now();
    let fast = kpz().args(["verify", "fast"]).output().expect("spawn kpz");
    let secs = start.elapsed().as_secs_f64();
    if fast.status.code() != Some(0) {
        failures.push(format!("`kpz verify fast` exited {:?}: {}", fast.status.code(), String::from_utf8_lossy(&fast.stderr)));
    }
    if secs >= FAST_SUITE_LIMIT_SECS {
        failures.push(format!("`kpz verify fast` took {secs:.1}s, limit {FAST_SUITE_LIMIT_SECS}s"));
    }
    println!("  kpz verify fast: exit {:?} in {secs:.1}s", fast.status.code());

    let dir = tempfile::tempdir().expect("tempdir");
    let runs: [&[&str]; 2] = [
        &["--seed", "42", "lpp-dist", "--p", "0.3", "--p", "0.4", "--q", "0.3", "--q", "0.4", "--samples", "20000"],
        &["--seed", "42", "simulate", "--model", "q-rsk", "--x", "0.5", "--x", "1", "--x", "1.5", "--q", "0.5", "--time", "4"],
    ];
    for (k, argv) in runs.iter().enumerate() {
        let hashes: Vec<String> = (0..2)
            .map(|rep| {
                let out = dir.path().join(format!("run{k}-{rep}"));
                let o = kpz().args(*argv).arg("--out").arg(&out).output().expect("spawn kpz");
                assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
                sha256_hex(&std::fs::read(&out).expect("output written"))
            })
            .collect();
        if hashes[0] != hashes[1] {
            failures.push(format!("{} hashes differ: {} vs {}", argv[2], hashes[0], hashes[1]));
        }
        println!("  {} sha256 {}", argv[2], hashes[0]);
    }
    failures
}

fn line(c: &CriterionOutcome) {
    let status = if c.passed { "PASS" } else { "FAIL" };
    println!("criterion {:>2} {:<22} {status} ({:.1}s)", c.id, c.name, c.seconds);
    for n in &c.notes {
        println!("  {n}");
    }
    for f in &c.failures {
        println!("  failure: {f}");
    }
}

#[test]
fn acceptance_criteria() {
    let opts = VerifyOptions::new(Suite::Full);
    let mut outcomes = Vec::new();
    for id in 1..=12u8 {
        let mut c = run_criterion(id, &opts);
        if id == 12 {
            let start = Instant::now();
            let extra = reproducibility_via_binary();
            c.seconds += start.elapsed().as_secs_f64();
            c.passed &= extra.is_empty();
            c.failures.extend(extra);
        }
        line(&c);
        outcomes.push(c);
    }
    let failed: Vec<String> = outcomes.iter().filter(|c| !c.passed).map(|c| format!("{} {}", c.id, c.name)).collect();
    println!("{} of 12 criteria pass", 12 - failed.len());
    assert!(failed.is_empty(), "failed: {}", failed.join(", "));
}
