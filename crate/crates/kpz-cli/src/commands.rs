//! Subcommands other than `verify`. Each returns a payload that depends only
//! on the arguments and the seed.

use crate::cli::*;
use crate::output::{sig15, Cell, Table};
use crate::CliError;
use combinat_core::{brute_force_paths, GtPattern, MaxPlus, PathEnsembleQuery, WeightMatrix};
use fredholm_numerics::{airy, airy_prime, lpp_cdf_exact, lpp_cdf_fredholm, lpp_cdf_mc, tw_gue_cdf_with, DetMethod};
use gt_dynamics::{simulate, DynamicsConfig, Model, Trajectory};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;
use whittaker_analysis::{loggamma_laplace, ContourSpec, LaplaceMethod, WhittakerError};

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Table(Table),
    Json(serde_json::Value),
    Text(String),
}

impl Payload {
    /// Bytes for the requested format; `None` picks the natural one.
    pub fn render(&self, format: Option<Format>) -> Result<Vec<u8>, CliError> {
        match (self, format) {
            (Payload::Table(t), None | Some(Format::Csv)) => Ok(t.to_csv()),
            (Payload::Table(t), Some(Format::Json)) => Ok(pretty(&t.to_json())),
            (Payload::Json(v), None | Some(Format::Json)) => Ok(pretty(v)),
            (Payload::Text(s), None) => Ok(s.clone().into_bytes()),
            (Payload::Json(_) | Payload::Text(_), Some(Format::Csv)) => {
                Err(CliError::Usage("this output is not tabular; use --format json".into()))
            }
            (Payload::Text(_), Some(Format::Json)) => unreachable!("text payloads are rendered by their command"),
        }
    }
}

fn pretty(v: &serde_json::Value) -> Vec<u8> {
    let mut s = serde_json::to_vec_pretty(v).expect("serializable");
    s.push(b'\n');
    s
}

/// Result of a command: its payload and, if a numerical check did not
/// settle, a description (exit code 2).
pub struct Outcome {
    pub payload: Payload,
    pub problem: Option<String>,
}

impl Outcome {
    fn ok(payload: Payload) -> Self {
        Outcome { payload, problem: None }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_shape(s: &str) -> Option<(usize, usize, &str)> {
    let (dims, kind) = s.split_once('-')?;
    let (r, c) = dims.split_once('x')?;
    Some((r.parse().ok()?, c.parse().ok()?, kind))
}

fn parse_matrix<T: combinat_core::Weight + std::str::FromStr + Clone>(s: &str, one: T, zero: T) -> Result<WeightMatrix<T>, CliError> {
    if let Some((r, c, kind)) = parse_shape(s) {
        let v = match kind {
            "ones" => one,
            "zeros" => zero,
            _ => return Err(usage(format!("unknown matrix preset {s}"))),
        };
        return WeightMatrix::new(r, c, vec![v; r * c]).map_err(usage);
    }
    let rows: Result<Vec<Vec<T>>, _> =
        s.split(';').map(|row| row.split(',').map(|x| x.trim().parse::<T>()).collect()).collect();
    let rows = rows.map_err(|_| usage(format!("cannot parse matrix {s:?}")))?;
    WeightMatrix::from_rows(&rows).map_err(usage)
}

pub fn parse_int_matrix(s: &str) -> Result<WeightMatrix<i64>, CliError> {
    if let Some(perm) = s.strip_prefix("perm:") {
        let sigma: Result<Vec<usize>, _> = perm.split(',').map(|x| x.trim().parse()).collect();
        let sigma = sigma.map_err(|_| usage(format!("cannot parse permutation {perm:?}")))?;
        let mut sorted = sigma.clone();
        sorted.sort_unstable();
        if sorted != (1..=sigma.len()).collect::<Vec<_>>() {
            return Err(usage(format!("{perm:?} is not a permutation of 1..{}", sigma.len())));
        }
        return Ok(WeightMatrix::permutation(&sigma));
    }
    parse_matrix(s, 1, 0)
}

/// sh(Z) from maximal r-path ensembles: λ_r = G_r − G_{r−1}.
pub fn greene_shape(w: &WeightMatrix<i64>) -> Vec<i64> {
    let (n, big_n) = (w.rows(), w.cols());
    let mp = w.map(|&x| MaxPlus::from(x));
    let mut shape = vec![0; big_n];
    let mut prev = 0;
    for r in 1..=n.min(big_n) {
        let q = PathEnsembleQuery::greene(n, r, big_n).expect("r ≤ min(n, N)");
        let g = brute_force_paths(&mp, &q).expect("valid query").0.expect("paths exist");
        shape[r - 1] = g - prev;
        prev = g;
    }
    shape
}

fn rows_json<T: serde::Serialize + Clone>(z: &GtPattern<T>) -> serde_json::Value {
    json!(z.rows())
}

fn trim(shape: &[i64]) -> Vec<i64> {
    shape.iter().copied().filter(|&v| v != 0).collect()
}

const GREENE_ORACLE_CELLS: usize = 36;

pub fn rsk(args: &RskArgs, format: Option<Format>) -> Result<Outcome, CliError> {
    let w = parse_int_matrix(&args.matrix)?;
    let backend = match args.backend {
        RskBackend::Insertion => rsk_engine::Backend::Insertion,
        RskBackend::LocalMoves => rsk_engine::Backend::LocalMoves,
    };
    let out = rsk_engine::rsk_forward(&w, backend).map_err(usage)?;
    let shape = trim(out.shape());
    let greene = (w.rows() * w.cols() <= GREENE_ORACLE_CELLS).then(|| trim(&greene_shape(&w)));
    let identity = args.round_trip.then(|| rsk_engine::rsk_inverse(&out).map(|b| b == w).unwrap_or(false));
    let mut problem = None;
    if greene.as_ref().is_some_and(|g| *g != shape) {
        problem = Some(format!("shape {shape:?} differs from the Greene oracle {greene:?}"));
    }
    if identity == Some(false) {
        problem = Some("inverse RSK did not return the input".into());
    }
    let payload = if format == Some(Format::Json) {
        Payload::Json(json!({
            "shape": shape,
            "greene_shape": greene,
            "z": rows_json(&out.z),
            "zprime": rows_json(&out.zprime),
            "identity": identity,
        }))
    } else if format == Some(Format::Csv) {
        return Err(usage("rsk output is not tabular; use --format json"));
    } else {
        let mut s = format!("shape: {}\n", join(&shape));
        match &greene {
            Some(g) => s += &format!("greene: {} ({})\n", join(g), if *g == shape { "agrees" } else { "DIFFERS" }),
            None => s += "greene: skipped (matrix too large for the brute-force oracle)\n",
        }
        s += &format!("Z:\n{}Z':\n{}", out.z, out.zprime);
        if let Some(id) = identity {
            s += &format!("identity: {id}\n");
        }
        Payload::Text(s)
    };
    Ok(Outcome { payload, problem })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn grsk(args: &GrskArgs, format: Option<Format>) -> Result<Outcome, CliError> {
    let w = parse_matrix(&args.matrix, 1.0, 0.0)?;
    let out = grsk_engine::grsk_forward(&w, grsk_engine::Backend::LocalMoves).map_err(usage)?;
    let n = w.cols();
    let polymer = grsk_engine::polymer_partition(&w);
    let corner = *out.z.get(n, 1);
    let energy = (w.rows() == n).then(|| grsk_engine::energy_report(&w, &out).map(|r| r.residual)).transpose().map_err(usage)?;
    let round_trip = if args.round_trip {
        let back = grsk_engine::grsk_inverse(&out).map_err(usage)?;
        Some(back.data().iter().zip(w.data()).map(|(a, b)| ((a - b) / b).abs()).fold(0.0, f64::max))
    } else {
        None
    };
    let fmt = |z: &GtPattern<f64>| {
        z.rows().iter().map(|r| r.iter().map(|&x| sig15(x)).collect::<Vec<_>>().join(" ") + "\n").collect::<String>()
    };
    let payload = match format {
        Some(Format::Json) => Payload::Json(json!({
            "z": rows_json(&out.z),
            "zprime": rows_json(&out.zprime),
            "polymer_partition": polymer,
            "corner": corner,
            "energy_residual": energy,
            "round_trip_max_rel_error": round_trip,
        })),
        Some(Format::Csv) => return Err(usage("grsk output is not tabular; use --format json")),
        None => {
            let mut s = format!("Z:\n{}Z':\n{}", fmt(&out.z), fmt(&out.zprime));
            s += &format!("polymer partition: {} (corner {})\n", sig15(polymer), sig15(corner));
            if let Some(e) = energy {
                s += &format!("energy identity residual: {}\n", sig15(e));
            }
            if let Some(r) = round_trip {
                s += &format!("round trip max relative error: {}\n", sig15(r));
            }
            Payload::Text(s)
        }
    };
    Ok(Outcome::ok(payload))
}

fn check_unit_interval(name: &str, v: &[f64]) -> Result<(), CliError> {
    if v.iter().any(|x| !(*x > 0.0 && *x < 1.0)) {
        return Err(usage(format!("--{name} values must lie in (0, 1)")));
    }
    Ok(())
}

pub fn lpp_dist(args: &LppArgs, seed: u64) -> Result<Outcome, CliError> {
    check_unit_interval("p", &args.p)?;
    check_unit_interval("q", &args.q)?;
    if args.p.len() != args.q.len() {
        return Err(usage("--p and --q must have the same length (the square N x N case)"));
    }
    if args.u_min > args.u_max {
        return Err(usage("--u-min exceeds --u-max"));
    }
    let exact = |v: &[f64]| -> Vec<BigRational> { v.iter().map(|&x| BigRational::from_float(x).expect("finite")).collect() };
    let (pr, qr) = (exact(&args.p), exact(&args.q));
    let us: Vec<i64> = (args.u_min..=args.u_max).collect();
    let mc = if args.samples > 0 { Some(lpp_cdf_mc(&args.p, &args.q, &us, args.samples, seed).map_err(usage)?) } else { None };
    let mut table = Table::new(vec!["u", "P_schur", "P_fredholm", "P_mc", "mc_stderr"]);
    let mut problem = None;
    for (k, &u) in us.iter().enumerate() {
        let schur = lpp_cdf_exact(u, &pr, &qr).to_f64().unwrap_or(f64::NAN);
        let fred = lpp_cdf_fredholm(u, &args.p, &args.q, args.nodes).map_err(usage)?;
        if !fred.converged && problem.is_none() {
            problem = Some(format!("Fredholm determinant at u = {u} changed by {:.3e} on refinement", fred.delta));
        }
        let (pm, se) = match &mc {
            Some(m) => (Cell::Num(m[k].value), Cell::Num(m[k].std_err)),
            None => (Cell::Empty, Cell::Empty),
        };
        table.push(vec![Cell::Int(u), Cell::Num(schur), Cell::Num(fred.value), pm, se]);
    }
    Ok(Outcome { payload: Payload::Table(table), problem })
}

pub fn polymer_laplace(args: &LaplaceArgs, seed: u64) -> Result<Outcome, CliError> {
    if args.alpha.len() != args.beta.len() {
        return Err(usage("--alpha and --beta must have the same length"));
    }
    let classify = |e: WhittakerError| match e {
        WhittakerError::NonConvergence { .. } => CliError::NonConvergence(e.to_string()),
        other => usage(other),
    };
    let spec = ContourSpec { delta: args.delta, nodes: args.nodes, ..ContourSpec::default() };
    let mut table = Table::new(vec!["s", "contour", "mc", "mc_stderr"]);
    for &s in &args.s {
        let contour = if args.alpha.len() <= 2 {
            Cell::Num(loggamma_laplace(s, &args.alpha, &args.beta, LaplaceMethod::Contour(spec)).map_err(classify)?.value)
        } else {
            Cell::Empty
        };
        let (mc, se) = if args.replicas > 0 {
            let m = loggamma_laplace(s, &args.alpha, &args.beta, LaplaceMethod::MonteCarlo { replicas: args.replicas, seed })
                .map_err(classify)?;
            (Cell::Num(m.value), Cell::Num(m.error))
        } else {
            (Cell::Empty, Cell::Empty)
        };
        table.push(vec![Cell::Num(s), contour, mc, se]);
    }
    Ok(Outcome::ok(Payload::Table(table)))
}

pub fn tw_cdf(args: &TwArgs) -> Result<Outcome, CliError> {
    if args.nodes < 8 {
        return Err(usage("--nodes must be at least 8"));
    }
    let mut table = Table::new(vec!["x", "F", "delta"]);
    let mut problem = None;
    for &x in &args.x {
        if !x.is_finite() {
            return Err(usage("--x must be finite"));
        }
        let r = tw_gue_cdf_with(x, args.nodes, DetMethod::Nystrom);
        if !r.converged && problem.is_none() {
            problem = Some(format!("F({x}) changed by {:.3e} when the nodes were doubled", r.delta));
        }
        table.push(vec![Cell::Num(x), Cell::Num(r.value), Cell::Num(r.delta)]);
    }
    Ok(Outcome { payload: Payload::Table(table), problem })
}

pub fn airy_table(args: &AiryArgs) -> Result<Outcome, CliError> {
    let mut table = Table::new(vec!["x", "ai", "ai_prime"]);
    for &x in &args.x {
        if !x.is_finite() {
            return Err(usage("--x must be finite"));
        }
        table.push(vec![Cell::Num(x), Cell::Num(airy(x)), Cell::Num(airy_prime(x))]);
    }
    Ok(Outcome::ok(Payload::Table(table)))
}

fn pattern_text(z: &GtPattern<i64>) -> String {
    z.rows().iter().map(|r| join(r)).collect::<Vec<_>>().join("|")
}

pub fn trajectory_json(run: serde_json::Value, tr: &Trajectory) -> serde_json::Value {
    let events: Vec<serde_json::Value> = tr
        .events
        .iter()
        .map(|e| json!({"time": e.time, "level": e.level, "index": e.index, "pattern": e.pattern.rows()}))
        .collect();
    json!({
        "run": run,
        "horizon": tr.horizon,
        "initial": tr.initial.rows(),
        "events": events,
    })
}

pub fn simulate_cmd(args: &SimulateArgs, seed: u64, format: Option<Format>) -> Result<Outcome, CliError> {
    let model = match args.model {
        ModelArg::PoissonRsk => Model::PoissonRsk,
        ModelArg::QRsk => Model::QRsk,
        ModelArg::QWhittaker => Model::QWhittaker,
    };
    let mut cfg = DynamicsConfig::new(model, &args.x, args.time, seed).with_q(args.q);
    cfg.max_events = args.max_events;
    let tr = simulate(&cfg).map_err(usage)?;
    if format == Some(Format::Csv) {
        let mut table = Table::new(vec!["time", "level", "index", "pattern"]);
        table.push(vec![Cell::Num(0.0), Cell::Empty, Cell::Empty, Cell::Text(pattern_text(&tr.initial))]);
        for e in &tr.events {
            table.push(vec![
                Cell::Num(e.time),
                Cell::Int(e.level as i64),
                Cell::Int(e.index as i64),
                Cell::Text(pattern_text(&e.pattern)),
            ]);
        }
        return Ok(Outcome::ok(Payload::Table(table)));
    }
    let run = json!({
        "subcommand": "simulate",
        "params": args,
        "seed": seed,
        "versions": crate::output::versions(),
    });
    Ok(Outcome::ok(Payload::Json(trajectory_json(run, &tr))))
}
