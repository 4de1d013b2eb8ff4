//! Acceptance criteria 1–12 as runnable checks. Seeds are fixed here, so a
//! verdict does not depend on `--seed`.

use crate::cli::{LppArgs, ModelArg, SimulateArgs, Suite};
use crate::commands::{greene_shape, lpp_dist, simulate_cmd};
use crate::output::sha256_hex;
use combinat_core::{lis, GtPattern, Partition, WeightMatrix};
use fredholm_numerics::*;
use gt_dynamics::*;
use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsk_engine::{rsk_forward, rsk_inverse, rsk_with_rule, Backend, MaxPlusRule, RskOutput};
use schur_macdonald::coeffs::rat;
use schur_macdonald::*;
use serde::Serialize;
use std::time::Instant;
use whittaker_analysis::{bump_stade, loggamma_laplace, ContourSpec, LaplaceMethod};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suite: Suite,
    /// Corrupt the RSK local move (negative control for criteria 1–2).
    pub corrupt_local_move: bool,
    /// Criteria to run; empty means all.
    pub only: Vec<u8>,
}

impl VerifyOptions {
    pub fn new(suite: Suite) -> Self {
        VerifyOptions { suite, corrupt_local_move: false, only: Vec::new() }
    }

    fn full(&self) -> bool {
        self.suite == Suite::Full
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub seconds: f64,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    /// Parts left out of the fast suite.
    pub skipped: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub passed: bool,
    pub total_seconds: f64,
    pub criteria: Vec<CriterionOutcome>,
}

impl VerifyReport {
    pub fn failed(&self) -> Vec<&CriterionOutcome> {
        self.criteria.iter().filter(|c| !c.passed).collect()
    }
}

#[derive(Default)]
struct Check {
    notes: Vec<String>,
    failures: Vec<String>,
    skipped: Vec<String>,
}

impl Check {
    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn skip(&mut self, s: &str) {
        self.skipped.push(s.to_string());
    }
}

type Criterion = (u8, &'static str, fn(&VerifyOptions, &mut Check));

const CRITERIA: [Criterion; 12] = [
    (1, "rsk-bijectivity", rsk_bijectivity),
    (2, "greene-schensted", greene_schensted),
    (3, "grsk-identities", grsk_identities),
    (4, "volume-preservation", volume_preservation),
    (5, "tropicalization", tropicalization),
    (6, "geometric-lpp-law", geometric_lpp_law),
    (7, "fredholm-engine", fredholm_engine),
    (8, "tracy-widom", tracy_widom),
    (9, "whittaker-loggamma", whittaker_loggamma),
    (10, "symmetric-functions", symmetric_functions),
    (11, "dynamics", dynamics),
    (12, "reproducibility", reproducibility),
];

/// `(id, name)` for every criterion, in order.
pub fn criteria() -> impl Iterator<Item = (u8, &'static str)> {
    CRITERIA.iter().map(|(id, name, _)| (*id, *name))
}

pub fn run_criterion(id: u8, opts: &VerifyOptions) -> CriterionOutcome {
    let (id, name, f) = CRITERIA[(id - 1) as usize];
    let start = Instant::now();
    let mut c = Check::default();
    f(opts, &mut c);
    let seconds = start.elapsed().as_secs_f64();
    log::info!("criterion {id} ({name}): {} in {seconds:.1}s", if c.failures.is_empty() { "pass" } else { "FAIL" });
    CriterionOutcome { id, name, passed: c.failures.is_empty(), seconds, notes: c.notes, failures: c.failures, skipped: c.skipped }
}

pub fn run_suite(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let criteria: Vec<CriterionOutcome> = CRITERIA
        .iter()
        .filter(|(id, _, _)| opts.only.is_empty() || opts.only.contains(id))
        .map(|(id, _, _)| run_criterion(*id, opts))
        .collect();
    VerifyReport {
        suite: opts.suite,
        passed: criteria.iter().all(|c| c.passed),
        total_seconds: start.elapsed().as_secs_f64(),
        criteria,
    }
}

fn local_moves(w: &WeightMatrix<i64>, opts: &VerifyOptions) -> RskOutput {
    rsk_with_rule(w, &MaxPlusRule { corrupt: opts.corrupt_local_move })
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn rsk_bijectivity(opts: &VerifyOptions, c: &mut Check) {
    let start = Instant::now();
    let mut bad = 0usize;
    let mut first = None;
    for code in 0..3usize.pow(9) {
        let data: Vec<i64> = (0..9).map(|k| ((code / 3usize.pow(k)) % 3) as i64).collect();
        let w = WeightMatrix::new(3, 3, data).expect("3x3");
        let ins = rsk_forward(&w, Backend::Insertion).expect("nonnegative");
        let lm = local_moves(&w, opts);
        let ok = ins == lm && rsk_inverse(&lm).is_ok_and(|b| b == w) && rsk_inverse(&ins).is_ok_and(|b| b == w);
        if !ok {
            bad += 1;
            first.get_or_insert(w);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    c.ensure(bad == 0, || format!("{bad} of 19683 matrices fail (first {:?})", first.map(|w| w.to_rows())));
    c.ensure(secs < 30.0, || format!("took {secs:.1}s, limit 30s"));
    c.note(format!("19683 matrices in {secs:.2}s"));
}

fn greene_schensted(opts: &VerifyOptions, c: &mut Check) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut bad, mut sums) = (0, 0);
    for _ in 0..200 {
        let (n, big_n) = (rng.random_range(1..=4), rng.random_range(1..=5));
        let w = WeightMatrix::from_fn(n, big_n, |_, _| rng.random_range(0..=4i64));
        let out = local_moves(&w, opts);
        let oracle = greene_shape(&w);
        for r in 1..=3usize.min(n).min(big_n) {
            let got: i64 = out.z.row(big_n)[..r].iter().sum();
            let want: i64 = oracle[..r].iter().sum();
            sums += 1;
            if got != want {
                bad += 1;
            }
        }
    }
    c.ensure(bad == 0, || format!("{bad} Greene sums differ from the max-plus path oracle"));
    let sigma = [3, 5, 1, 6, 2, 4, 7];
    let out = local_moves(&WeightMatrix::permutation(&sigma), opts);
    let shape: Vec<i64> = out.shape().iter().copied().filter(|&v| v != 0).collect();
    c.ensure(shape == [4, 3], || format!("permutation 3561247 has shape {shape:?}, expected [4, 3]"));
    let l = lis(&sigma.map(|v| v as i64));
    c.ensure(l == 4, || format!("LIS {l}, expected 4"));
    c.note(format!("{sums} Greene sums over 200 matrices; permutation fixture shape {shape:?}, LIS {l}"));
}

fn grsk_identities(_: &VerifyOptions, c: &mut Check) {
    use grsk_engine::{energy_report, grsk_forward, polymer_partition, strict_weak_partition, Backend as G};
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut worst_type, mut worst_energy, mut worst_poly, mut worst_sw) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut asym = 0;
    for _ in 0..1000 {
        let (r, k) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let w = WeightMatrix::from_fn(r, k, |_, _| rng.random_range(0.1..5.0));
        let out = grsk_forward(&w, G::LocalMoves).expect("positive");
        let (_, ty) = out.z.shape_and_type();
        let (_, typ) = out.zprime.shape_and_type();
        for j in 1..=k {
            worst_type = worst_type.max(rel(ty[j - 1], (1..=r).map(|i| w[(i, j)]).product()));
        }
        for i in 1..=r {
            worst_type = worst_type.max(rel(typ[i - 1], w.row(i).iter().product()));
        }
        worst_poly = worst_poly.max(rel(*out.z.get(k, 1), polymer_partition(&w)));
        // strict-weak paths run down the longer side
        let sw = if r >= k {
            rel(strict_weak_partition(&w).expect("rows ≥ cols"), 1.0 / out.z.get(k, k))
        } else {
            rel(strict_weak_partition(&w.transpose()).expect("rows ≥ cols"), 1.0 / out.zprime.get(r, r))
        };
        worst_sw = worst_sw.max(sw);
        if r == k {
            worst_energy = worst_energy.max(energy_report(&w, &out).expect("square").residual);
            let s = WeightMatrix::from_fn(r, r, |i, j| if i <= j { w[(i, j)] } else { w[(j, i)] });
            let so = grsk_forward(&s, G::LocalMoves).expect("positive");
            if so.z != so.zprime {
                asym += 1;
            }
        }
    }
    c.ensure(worst_energy < 1e-10, || format!("energy identity relative error {worst_energy:e}"));
    c.ensure(worst_type < 1e-10, || format!("type identity relative error {worst_type:e}"));
    c.ensure(worst_poly < 1e-12, || format!("polymer corner relative error {worst_poly:e}"));
    c.ensure(worst_sw < 1e-12, || format!("strict-weak relative error {worst_sw:e}"));
    c.ensure(asym == 0, || format!("{asym} symmetric inputs give Z ≠ Z'"));
    c.note(format!("max rel errors: energy {worst_energy:.1e}, type {worst_type:.1e}, polymer {worst_poly:.1e}, strict-weak {worst_sw:.1e}"));
}

fn volume_preservation(_: &VerifyOptions, c: &mut Check) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let w = WeightMatrix::from_fn(3, 4, |_, _| rng.random_range(0.2..5.0));
        worst = worst.max(grsk_engine::jacobian_logdet(&w).expect("positive").abs());
    }
    c.ensure(worst < 1e-4, || format!("max |log|det J|| = {worst:e}"));
    c.note(format!("max |log|det J|| = {worst:.2e}"));
}

fn tropicalization(_: &VerifyOptions, c: &mut Check) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases = vec![WeightMatrix::permutation(&[3, 5, 1, 6, 2, 4, 7])];
    for _ in 0..50 {
        let (r, k) = (rng.random_range(1..=4), rng.random_range(1..=4));
        cases.push(WeightMatrix::from_fn(r, k, |_, _| rng.random_range(0..=5i64)));
    }
    let mut worst = 0.0f64;
    for w in &cases {
        let e: Vec<f64> = [1e-1, 1e-2, 1e-3].iter().map(|&eps| grsk_engine::tropical_error(w, eps)).collect();
        worst = worst.max(e[2]);
        // past ε ≈ 1e−2 the error sits at rounding level, so ties within
        // 1e−12 count as non-increasing
        c.ensure(e[1] <= e[0] + 1e-12 && e[2] <= e[1] + 1e-12, || format!("error increases in ε: {e:?} for {:?}", w.to_rows()));
    }
    c.ensure(worst <= 0.02, || format!("error {worst} at ε = 1e-3"));
    c.note(format!("max error at ε = 1e-3: {worst:.2e}"));
}

fn geometric_lpp_law(opts: &VerifyOptions, c: &mut Check) {
    let start = Instant::now();
    let (p, q) = ([0.3, 0.4], [0.3, 0.4]);
    let (pr, qr) = ([rat(3, 10), rat(2, 5)], [rat(3, 10), rat(2, 5)]);
    let us: Vec<i64> = (0..=12).collect();
    let exact: Vec<f64> = us.iter().map(|&u| lpp_cdf_exact(u, &pr, &qr).to_f64().expect("finite")).collect();
    let mut worst = 0.0f64;
    for (&u, &e) in us.iter().zip(&exact) {
        match lpp_cdf_fredholm(u, &p, &q, 64) {
            Ok(r) => worst = worst.max((r.value - e).abs()),
            Err(err) => c.ensure(false, || format!("Fredholm at u = {u}: {err}")),
        }
    }
    c.ensure(worst < 1e-8, || format!("Schur sum vs Fredholm differ by {worst:e}"));
    c.note(format!("Schur vs Fredholm max |Δ| = {worst:.1e}"));
    if opts.full() {
        let mc = lpp_cdf_mc(&p, &q, &us, 1_000_000, 6).expect("valid parameters");
        let worst_z = us.iter().zip(&mc).zip(&exact).map(|((_, m), &e)| m.z_score(e).abs()).fold(0.0, f64::max);
        c.ensure(worst_z <= 3.0, || format!("Monte Carlo |z| = {worst_z:.2} > 3"));
        c.note(format!("Monte Carlo 1e6 samples: max |z| = {worst_z:.2}"));
    } else {
        c.skip("Monte Carlo at 1e6 samples");
    }
    for (pn, pd, qn, qd) in [(3, 10, 2, 5), (1, 2, 1, 3), (9, 10, 7, 8)] {
        let (p1, q1) = (rat(pn, pd), rat(qn, qd));
        for u in 0..=12i64 {
            let want = BigRational::one() - num_traits::pow(&p1 * &q1, (u + 1) as usize);
            let got = lpp_cdf_exact(u, std::slice::from_ref(&p1), std::slice::from_ref(&q1));
            c.ensure(got == want, || format!("N = 1 closed form fails at p = {p1}, q = {q1}, u = {u}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    c.ensure(secs < 300.0, || format!("took {secs:.0}s, limit 300s"));
}

fn fredholm_engine(_: &VerifyOptions, c: &mut Check) {
    // rank one, exact in rationals on a finite set
    let phi = [rat(1, 2), rat(3, 1), rat(-2, 7), rat(1, 1)];
    let psi = [rat(2, 3), rat(1, 5), rat(4, 1), rat(-1, 9)];
    let m: Vec<Vec<BigRational>> = (0..4)
        .map(|i| (0..4).map(|j| if i == j { BigRational::one() } else { BigRational::zero() } + &phi[i] * &psi[j]).collect())
        .collect();
    let sum: BigRational = (0..4).map(|i| &phi[i] * &psi[i]).sum();
    c.ensure(combinat_core::paths::determinant(m) == BigRational::one() + sum, || "rank-one closed form (exact) fails".into());
    let f = |x: f64| (2.0 * x).sin() + 1.0;
    let g = |y: f64| (-y).exp();
    let r = fredholm_det(&|x, y| f(x) * g(y), Domain::Interval { a: 0.0, b: 1.0 }, 32, DetMethod::Nystrom, 1.0);
    let want = 1.0 + Quadrature::legendre(64, 0.0, 1.0).integrate(|x| f(x) * g(x));
    c.ensure((r.value - want).abs() < 1e-13, || format!("rank-one Nyström off by {:e}", (r.value - want).abs()));

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut worst_ab, mut worst_eig) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let k = rng.random_range(1..=3usize);
        let cf: Vec<f64> = (0..12).map(|_| rng.random_range(-2.0..2.0)).collect();
        let a = |m: usize, x: f64| (cf[m] * x + cf[m + 3]).sin();
        let b = |m: usize, y: f64| (cf[m + 6] * y).exp() * cf[m + 9] * 0.5;
        let ab = |x: f64, y: f64| (0..k).map(|m| a(m, x) * b(m, y)).sum::<f64>();
        let lhs = fredholm_det(&ab, Domain::Interval { a: 0.0, b: 1.0 }, 32, DetMethod::Nystrom, 1.0).value;
        let q = Quadrature::legendre(64, 0.0, 1.0);
        let ba = DMatrix::from_fn(k, k, |i, j| q.integrate(|x| b(i, x) * a(j, x)));
        worst_ab = worst_ab.max((lhs - nystrom_matrix_det(&ba)).abs());

        let v: Vec<f64> = (0..25).map(|_| rng.random_range(-0.5..0.5)).collect();
        let m = DMatrix::from_fn(5, 5, |i, j| v[5 * i.min(j) + i.max(j)]);
        let prod: f64 = m.clone().symmetric_eigen().eigenvalues.iter().map(|l| 1.0 + l).product();
        worst_eig = worst_eig.max((nystrom_matrix_det(&m) - prod).abs());
    }
    c.ensure(worst_ab < 1e-8, || format!("det(I+AB) vs det(I+BA): {worst_ab:e}"));
    c.ensure(worst_eig < 1e-12, || format!("eigenproduct: {worst_eig:e}"));

    // biorthogonal identity on the N = 2 geometric instance
    let atoms = 48;
    let (p, q) = ([0.3, 0.4], [0.3, 0.4]);
    let phi: Vec<Vec<f64>> = p.iter().map(|pi: &f64| (0..atoms).map(|t| pi.powi(t)).collect()).collect();
    let psi: Vec<Vec<f64>> = q.iter().map(|qj: &f64| (0..atoms).map(|t| qj.powi(t)).collect()).collect();
    let mut worst_bi = 0.0f64;
    for u in 0..=6i32 {
        let g: Vec<f64> = (0..atoms).map(|t| if t >= u + 2 { -1.0 } else { 0.0 }).collect();
        match biorthogonal_fredholm_check(&phi, &psi, &vec![1.0; atoms as usize], &g) {
            Ok((ratio, det)) => worst_bi = worst_bi.max((ratio - det).abs()),
            Err(e) => c.ensure(false, || format!("biorthogonal check: {e}")),
        }
    }
    c.ensure(worst_bi < 1e-10, || format!("biorthogonal residual {worst_bi:e}"));
    c.note(format!("det(I+AB)-det(I+BA) {worst_ab:.1e}, eigenproduct {worst_eig:.1e}, biorthogonal {worst_bi:.1e}"));
}

fn tracy_widom(opts: &VerifyOptions, c: &mut Check) {
    let mut prev = f64::NEG_INFINITY;
    let mut worst_delta = 0.0f64;
    for k in 0..50 {
        let x = -8.0 + 14.0 * k as f64 / 49.0;
        let r = tw_gue_cdf(x);
        c.ensure(r.value >= prev, || format!("not monotone at x = {x}"));
        worst_delta = worst_delta.max(r.delta);
        prev = r.value;
    }
    c.ensure(worst_delta < 1e-8, || format!("self-convergence delta {worst_delta:e} at 96 nodes"));
    let (lo, hi) = (tw_gue_cdf(-8.0).value, tw_gue_cdf(6.0).value);
    c.ensure(lo < 1e-3, || format!("F(-8) = {lo:e}"));
    c.ensure(1.0 - hi < 1e-8, || format!("1 - F(6) = {:e}", 1.0 - hi));
    for x in [-2.0, 0.0, 2.0] {
        let d = (tw_gue_cdf(x).value - tw_series_oracle(x)).abs();
        c.ensure(d < 1e-6, || format!("series oracle differs by {d:e} at x = {x}"));
    }
    c.note(format!("grid delta max {worst_delta:.1e}"));
    if opts.full() {
        let (n, a) = (200usize, 0.5f64);
        let (f, sigma) = (2.0 / a, (2.0 / (a * a * a)).cbrt());
        let mut worst = 0.0f64;
        for x in [-3.0, -2.0, -1.0, 0.0, 1.0] {
            let u = f * n as f64 + sigma * (n as f64).cbrt() * x;
            match exp_lpp_cdf_equal(n, a, u, 96) {
                Ok(r) => {
                    c.ensure(r.converged, || format!("N = 200 determinant not settled at x = {x}"));
                    worst = worst.max((r.value - tw_gue_cdf(x).value).abs());
                }
                Err(e) => c.ensure(false, || format!("N = 200 at x = {x}: {e}")),
            }
        }
        c.ensure(worst < 0.02, || format!("N = 200 exponential LPP differs from F₂ by {worst}"));
        c.note(format!("N = 200 max |F_N - F_2| = {worst:.4}"));
    } else {
        c.skip("N = 200 exponential LPP trend");
    }
}

fn whittaker_loggamma(opts: &VerifyOptions, c: &mut Check) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let draws = if opts.full() { 5 } else { 1 };
    if !opts.full() {
        c.skip("Bump-Stade draws 2-5");
    }
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let a: Vec<f64> = (0..2).map(|_| rng.random_range(0.6..1.6)).collect();
        let b: Vec<f64> = (0..2).map(|_| rng.random_range(0.6..1.6)).collect();
        match bump_stade(&a, &b) {
            Ok(r) => worst = worst.max(r.residual),
            Err(e) => c.ensure(false, || format!("Bump-Stade at α = {a:?}, β = {b:?}: {e}")),
        }
    }
    c.ensure(worst < 1e-5, || format!("Bump-Stade residual {worst:e}"));
    for (a, b) in [(0.4, 0.7), (1.0, 2.5), (0.2, 0.3)] {
        match bump_stade(&[a], &[b]) {
            Ok(r) => c.ensure((r.integral - r.exact).abs() < 1e-10, || format!("n = 1 off by {:e}", (r.integral - r.exact).abs())),
            Err(e) => c.ensure(false, || format!("n = 1: {e}")),
        }
    }
    let (a, b) = ([0.9, 1.2], [1.0, 1.1]);
    let contour = |s: f64| loggamma_laplace(s, &a, &b, LaplaceMethod::Contour(ContourSpec::default()));
    let mc = |s: f64, replicas| loggamma_laplace(s, &a, &b, LaplaceMethod::MonteCarlo { replicas, seed: 10 });
    let zero = (contour(0.0).map(|e| e.value), mc(0.0, 1000).map(|e| e.value));
    c.ensure(zero == (Ok(1.0), Ok(1.0)), || format!("s = 0 gives {zero:?}"));
    if opts.full() {
        for s in [0.1, 0.5, 2.0] {
            match (contour(s), mc(s, 1_000_000)) {
                (Ok(cv), Ok(m)) => {
                    let z = (cv.value - m.value).abs() / m.error;
                    c.ensure(z <= 3.0, || format!("s = {s}: contour {} vs MC {} ± {}", cv.value, m.value, m.error));
                    c.note(format!("s = {s}: contour {:.6}, |z| = {z:.2}", cv.value));
                }
                (e1, e2) => c.ensure(false, || format!("s = {s}: {e1:?} {e2:?}")),
            }
        }
    } else {
        c.skip("Laplace contour vs Monte Carlo at 1e6 replicas");
    }
    c.note(format!("Bump-Stade max residual {worst:.1e} over {draws} draws"));
    let secs = start.elapsed().as_secs_f64();
    c.ensure(secs < 600.0, || format!("took {secs:.0}s, limit 600s"));
}

fn symmetric_functions(_: &VerifyOptions, c: &mut Check) {
    let x = [rat(1, 2), rat(2, 3), rat(3, 7), rat(5, 4)];
    let mut count = 0;
    for n in 1..=4 {
        for lam in Partition::all_up_to(8, n) {
            count += 1;
            let (gt, bi) = (schur_gt_sum(&lam, &x[..n]), schur_bialternant(&lam, &x[..n]));
            c.ensure(gt.is_ok() && gt == bi, || format!("GT sum ≠ bialternant for {lam} in {n} variables"));
        }
    }
    c.note(format!("{count} (λ, n) pairs: GT sum = bialternant"));
    let qt = ExactCoeffs::new(rat(2, 5), rat(2, 5)).expect("valid");
    let y = [rat(1, 2), rat(2, 3), rat(3, 7)];
    for lam in Partition::all_up_to(6, 3) {
        let s = schur_gt_sum(&lam, &y).expect("fits");
        let ok = macdonald(&lam, &Partition::empty(), &y, &qt, Which::P) == s
            && macdonald(&lam, &Partition::empty(), &y, &qt, Which::Q) == s;
        c.ensure(ok, || format!("Macdonald at q = t differs from Schur for {lam}"));
    }
    let sc = cauchy_residual(&[0.3, 0.2], &[0.3, 0.2], Family::Schur, 12);
    c.ensure(sc.as_ref().is_ok_and(|r| *r < 1e-8), || format!("Schur Cauchy residual at L = 12: {sc:?}"));
    let mc = cauchy_residual(&[0.2], &[0.3], Family::Macdonald { q: 0.4, t: 0.1 }, 20);
    c.ensure(mc.as_ref().is_ok_and(|r| *r < 1e-8), || format!("Macdonald Cauchy residual at L = 20: {mc:?}"));
    let mut worst = 0.0f64;
    for (q, t) in [(0.4, 0.1), (0.3, 0.3), (0.5, 0.0)] {
        let co = FloatCoeffs::new(q, t).expect("valid");
        for lam in Partition::all_up_to(3, 3) {
            for nu in Partition::all_up_to(3, 3) {
                match skew_cauchy_sides(&lam, &nu, &[0.3], &[0.25], &co, 14) {
                    Ok((l, r)) => worst = worst.max((l - r).abs()),
                    Err(e) => c.ensure(false, || format!("skew Cauchy {lam} {nu}: {e}")),
                }
            }
        }
    }
    c.ensure(worst < 1e-8, || format!("skew Cauchy residual {worst:e}"));
    for lam in Partition::all_up_to(5, 3) {
        let r = pieri_residual(&lam, PieriRule::SchurH1, &ExactCoeffs::schur(), &y);
        c.ensure(r.is_zero(), || format!("Schur Pieri fails at {lam}"));
        let t0 = ExactCoeffs::q_t0(rat(2, 7));
        for rule in [PieriRule::MacdonaldG1, PieriRule::MacdonaldE1] {
            c.ensure(pieri_residual(&lam, rule, &t0, &y).is_zero(), || format!("{rule:?} (t = 0, exact) fails at {lam}"));
        }
        for (q, t) in [(0.3, 0.6), (0.8, 0.2), (0.5, 0.5)] {
            let co = FloatCoeffs::new(q, t).expect("valid");
            for rule in [PieriRule::MacdonaldG1, PieriRule::MacdonaldE1] {
                let r = pieri_residual(&lam, rule, &co, &[0.2, 0.5, 0.7]);
                c.ensure(r.abs() < 1e-10, || format!("{rule:?} at q = {q}, t = {t} fails at {lam}: {r:e}"));
            }
        }
    }
    c.note(format!("skew Cauchy max residual {worst:.1e}"));
}

fn dynamics(_: &VerifyOptions, c: &mut Check) {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let schur_cases = [vec![r(3, 2)], vec![r(1, 1), r(2, 1)], vec![r(1, 1), r(2, 1), r(1, 3)]];
    for x in schur_cases {
        let n = x.len();
        match intertwining_residual(&KernelModel::Schur { x }, n, 8) {
            Ok(rep) => {
                c.ensure(rep.exact_zero, || format!("Schur n = {n}: residual {:e}", rep.residual));
                c.ensure(rep.interior_row_defect == 0.0, || format!("Schur n = {n}: Doob rows do not conserve Σx"));
                c.note(format!("Schur n = {n}, M = 8: {} pairs, residual exactly 0", rep.pairs));
            }
            Err(e) => c.ensure(false, || format!("Schur n = {n}: {e}")),
        }
    }
    let model = KernelModel::MacdonaldT0 { x: vec![r(1, 1), r(1, 2)], q: r(1, 3), rho: r(1, 5) };
    match intertwining_residual(&model, 2, 6) {
        Ok(rep) => {
            c.ensure(rep.exact_zero, || format!("Macdonald t = 0: residual {:e}", rep.residual));
            c.note(format!("Macdonald t = 0, M = 6: {} pairs, residual exactly 0, max leak {:.3}", rep.pairs, rep.max_leak));
        }
        Err(e) => c.ensure(false, || format!("Macdonald t = 0: {e}")),
    }

    // total rate Σx: exact on interior states; boundary states also lose
    // rate out of the box, which is kept in f64
    let x = [r(1, 1), r(2, 1), r(1, 3)];
    let total = x.iter().fold(BigRational::zero(), |a, b| a + b);
    let generator = schur_generator(&x, 6);
    let mut worst = 0.0f64;
    for (s, row) in generator.rows.iter().enumerate() {
        let out = row.iter().filter(|(u, _)| *u != s).fold(BigRational::zero(), |a, (_, w)| a + w);
        let diag = row.iter().find(|(u, _)| *u == s).map(|(_, w)| w.clone());
        c.ensure(diag == Some(-total.clone()), || format!("diagonal of state {s} is not -Σx"));
        if generator.leak[s] == 0.0 {
            c.ensure(out == total, || format!("exit rate of interior state {s} is not Σx"));
        }
        let defect = (out.to_f64().unwrap_or(f64::NAN) + generator.leak[s] - total.to_f64().unwrap_or(f64::NAN)).abs();
        worst = worst.max(defect);
    }
    c.ensure(worst < 1e-14, || format!("exit rates differ from Σx by {worst:e}"));

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let xf = [0.7, 1.3, 2.0, 0.4];
    for _ in 0..300 {
        let z = GtPattern::sample(4, 4, 3, &mut rng);
        for q in [0.0, 0.3, 0.8] {
            for k in 1..=4 {
                for j in 1..=k {
                    let rate = qwhittaker_rate(&z, &xf, q, k, j);
                    let blocked = j > 1 && z.get(k - 1, j - 1) == z.get(k, j);
                    c.ensure(rate >= 0.0 && (!blocked || rate == 0.0), || format!("q-Whittaker rate {rate} at ({k},{j}) of {z:?}"));
                }
                let want = if k == 1 { xf[0] } else { xf[k - 1] * (1.0 - q.powi((z.get(k - 1, k - 1) - z.get(k, k)) as i32)) };
                let got = qwhittaker_rate(&z, &xf, q, k, k);
                c.ensure(got == want, || format!("q-TASEP rate {got} vs {want} at k = {k}"));
            }
        }
    }

    match pitman_rogers_distance(&[1.0, 1.0], &[2, 0], &[0.5, 1.0], 100_000, 12, &InitialLaw::Links) {
        Ok(cps) => {
            for cp in &cps {
                c.ensure(cp.within(3.0), || format!("Pitman-Rogers at t = {}: TV {:.4}, z = {:.2}", cp.time, cp.tv, cp.z));
            }
            c.note(format!("Pitman-Rogers z: {}", cps.iter().map(|cp| format!("{:.2}", cp.z)).collect::<Vec<_>>().join(", ")));
        }
        Err(e) => c.ensure(false, || format!("Pitman-Rogers: {e}")),
    }
    let start = GtPattern::from_rows(vec![vec![0], vec![2, 0]]).expect("valid rows");
    match pitman_rogers_distance(&[1.0, 1.0], &[2, 0], &[0.5], 100_000, 12, &InitialLaw::Fixed(start)) {
        Ok(cps) => c.ensure(cps[0].z > 3.0, || format!("degenerate start not detected: z = {:.2}", cps[0].z)),
        Err(e) => c.ensure(false, || format!("Pitman-Rogers control: {e}")),
    }

    let law = BurkeLaw { theta: 1.5, mu: 4.0, rate: 1.0 };
    match burke_check(&law, &law, 100_000, 13) {
        Ok(rep) => {
            c.ensure(rep.passes(), || format!("Burke KS {:?} vs critical {:.4}", rep.ks, rep.critical));
            c.note(format!("Burke KS max {:.4} (critical {:.4})", rep.ks.iter().cloned().fold(0.0, f64::max), rep.critical));
        }
        Err(e) => c.ensure(false, || format!("Burke: {e}")),
    }
}

fn reproducibility(_: &VerifyOptions, c: &mut Check) {
    let lpp = || {
        let args = LppArgs { p: vec![0.3, 0.4], q: vec![0.3, 0.4], u_min: 0, u_max: 6, nodes: 64, samples: 20_000 };
        lpp_dist(&args, 5).map(|o| o.payload.render(None))
    };
    let sim = |seed| {
        let args = SimulateArgs { model: ModelArg::QWhittaker, x: vec![1.0, 0.5, 2.0], q: 0.4, time: 5.0, max_events: 100_000 };
        simulate_cmd(&args, seed, None).map(|o| o.payload.render(None))
    };
    type Rendered = std::result::Result<std::result::Result<Vec<u8>, crate::CliError>, crate::CliError>;
    let digest = |r: Rendered| match r {
        Ok(Ok(b)) => sha256_hex(&b),
        Ok(Err(e)) | Err(e) => format!("error: {e}"),
    };
    let (a, b) = (digest(lpp()), digest(lpp()));
    c.ensure(a == b, || format!("lpp-dist hashes differ: {a} vs {b}"));
    let (s1, s2, s3) = (digest(sim(7)), digest(sim(7)), digest(sim(8)));
    c.ensure(s1 == s2, || format!("simulate hashes differ: {s1} vs {s2}"));
    c.ensure(s1 != s3, || "different seeds give identical trajectories".into());
    c.note(format!("lpp-dist sha256 {}…, simulate sha256 {}…", &a[..12.min(a.len())], &s1[..12.min(s1.len())]));
}
