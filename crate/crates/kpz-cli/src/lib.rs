//! Library side of the `kpz` command: argument parsing, subcommands and the
//! verification suites.

pub mod cli;
pub mod commands;
pub mod output;
pub mod verify;

use clap::Parser;
use cli::{Cli, Command};
use commands::Outcome;
use output::{sha256_hex, RunManifest};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numeric non-convergence: {0}")]
    NonConvergence(String),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::NonConvergence(_) | CliError::Verify(_) => 2,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 success, 1 usage error, 2 numerical failure.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("kpz: {e}");
            e.exit_code()
        }
    }
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        if rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            log::warn!("thread pool already initialised; --threads ignored");
        }
    }
    let start = Instant::now();
    let seed = cli.seed;
    let outcome = match &cli.command {
        Command::Rsk(a) => commands::rsk(a, cli.format)?,
        Command::Grsk(a) => commands::grsk(a, cli.format)?,
        Command::LppDist(a) => commands::lpp_dist(a, seed)?,
        Command::PolymerLaplace(a) => commands::polymer_laplace(a, seed)?,
        Command::TwCdf(a) => commands::tw_cdf(a)?,
        Command::Airy(a) => commands::airy_table(a)?,
        Command::Simulate(a) => commands::simulate_cmd(a, seed, cli.format)?,
        Command::Verify(a) => verify_cmd(a)?,
    };
    let bytes = outcome.payload.render(cli.format)?;
    let elapsed = start.elapsed().as_secs_f64();
    log::info!("{} finished in {elapsed:.3}s", cli.command.name());
    let manifest = RunManifest {
        subcommand: cli.command.name().to_string(),
        params: serde_json::to_value(&cli.command).expect("serializable"),
        seed,
        versions: output::versions(),
        timings: BTreeMap::from([("wall_seconds".to_string(), elapsed)]),
        outputs: cli.out.iter().map(|p| p.display().to_string()).collect(),
        payload_sha256: sha256_hex(&bytes),
    };
    match &cli.out {
        Some(path) => {
            write_file(path, &bytes)?;
            let mut m = serde_json::to_vec_pretty(&manifest).expect("serializable");
            m.push(b'\n');
            write_file(&manifest_path(path), &m)?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(&bytes)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })?;
            // Without --out the manifest goes to stderr as one JSON line.
            eprintln!("{}", serde_json::to_string(&manifest).expect("serializable"));
        }
    }
    match (outcome.problem, &cli.command) {
        (None, _) => Ok(()),
        (Some(p), Command::Verify(_)) => Err(CliError::Verify(p)),
        (Some(p), _) => Err(CliError::NonConvergence(p)),
    }
}

fn verify_cmd(args: &cli::VerifyArgs) -> Result<Outcome, CliError> {
    let opts = verify::VerifyOptions { suite: args.suite, corrupt_local_move: args.corrupt_local_move, only: args.only.clone() };
    let report = verify::run_suite(&opts);
    for c in &report.criteria {
        eprintln!("criterion {:>2} {:<22} {} ({:.1}s)", c.id, c.name, if c.passed { "pass" } else { "FAIL" }, c.seconds);
    }
    let failed = report.failed();
    let problem = (!failed.is_empty()).then(|| {
        failed.iter().map(|c| format!("{} ({}): {}", c.id, c.name, c.failures.join("; "))).collect::<Vec<_>>().join(" | ")
    });
    let payload = commands::Payload::Json(serde_json::to_value(&report).expect("serializable"));
    Ok(Outcome { payload, problem })
}
