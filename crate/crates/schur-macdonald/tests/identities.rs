use combinat_core::Partition;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use schur_macdonald::coeffs::rat;
use schur_macdonald::{
    cauchy_residual, macdonald, pieri_apply, pieri_residual, schur_bialternant, schur_branching, schur_gt_sum,
    skew_cauchy_sides, skew_coeffs, Coefficients, ExactCoeffs, Family, FloatCoeffs, PieriRule, Which,
};

fn p(v: &[i64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn rationals(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((1i64..9, 1i64..9), n).prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
}

fn distinct(x: &[BigRational]) -> bool {
    (0..x.len()).all(|i| (0..i).all(|j| x[i] != x[j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // exact rationals
    #[test]
    fn gt_sum_equals_bialternant(n in 1usize..=4, size in 0i64..=8, pick in any::<prop::sample::Index>(), x in rationals(4)) {
        let x = &x[..n];
        prop_assume!(distinct(x));
        let all = Partition::all_of_size(size, n);
        let lam = &all[pick.index(all.len())];
        prop_assert_eq!(schur_gt_sum(lam, x).unwrap(), schur_bialternant(lam, x).unwrap());
    }

    // exact rationals
    #[test]
    fn branching_consistency(n in 1usize..=4, size in 0i64..=7, pick in any::<prop::sample::Index>(), x in rationals(4)) {
        let x = &x[..n];
        let all = Partition::all_of_size(size, n);
        let lam = &all[pick.index(all.len())];
        prop_assert_eq!(schur_gt_sum(lam, x).unwrap(), schur_branching(lam.parts(), x));
    }

    // exact rationals
    #[test]
    fn schur_pieri_exact(n in 1usize..=3, size in 0i64..=5, pick in any::<prop::sample::Index>(), x in rationals(3)) {
        let all = Partition::all_of_size(size, 3);
        let lam = &all[pick.index(all.len())];
        let r = pieri_residual(lam, PieriRule::SchurH1, &ExactCoeffs::schur(), &x[..n]);
        prop_assert!(r.is_zero());
    }

    // doubles
    #[test]
    fn macdonald_pieri_numeric(q in 0.0f64..0.9, t in 0.0f64..0.9, size in 0i64..=4, pick in any::<prop::sample::Index>(),
                               x in prop::collection::vec(0.05f64..1.0, 1..=3)) {
        let c = FloatCoeffs::new(q, t).unwrap();
        let all = Partition::all_of_size(size, 3);
        let lam = &all[pick.index(all.len())];
        for rule in [PieriRule::MacdonaldG1, PieriRule::MacdonaldE1] {
            let r = pieri_residual(lam, rule, &c, &x);
            prop_assert!(r.abs() < 1e-10, "{:?} residual {}", rule, r);
        }
    }
}

// exact rationals
#[test]
fn macdonald_at_q_equals_t_is_schur() {
    let c = ExactCoeffs::new(rat(2, 5), rat(2, 5)).unwrap();
    let x = [rat(1, 2), rat(2, 3), rat(3, 7)];
    for lam in Partition::all_up_to(6, 3) {
        let want = schur_gt_sum(&lam, &x).unwrap();
        assert_eq!(macdonald(&lam, &Partition::empty(), &x, &c, Which::P), want);
        assert_eq!(macdonald(&lam, &Partition::empty(), &x, &c, Which::Q), want);
    }
}

// doubles
#[test]
fn float_macdonald_at_q_equals_t_is_schur() {
    let c = FloatCoeffs::new(0.45, 0.45).unwrap();
    let x = [0.5, 0.25, 0.75];
    for lam in Partition::all_up_to(6, 3) {
        let want = schur_gt_sum(&lam, &x).unwrap();
        let got = macdonald(&lam, &Partition::empty(), &x, &c, Which::P);
        assert!((got - want).abs() < 1e-12 * want.max(1.0), "{lam}");
    }
}

// doubles against exact rationals
#[test]
fn t0_float_coefficients_match_closed_form() {
    let exact = ExactCoeffs::q_t0(rat(3, 10));
    let float = FloatCoeffs::new(0.3, 0.0).unwrap();
    for lam in Partition::all_up_to(6, 3) {
        for mu in Partition::all_up_to(lam.size(), 3) {
            if !lam.is_horizontal_strip_over(&mu) {
                continue;
            }
            let (a, b) = (exact.phi(&lam, &mu).to_f64().unwrap(), float.phi(&lam, &mu));
            assert!((a - b).abs() < 1e-13, "phi {lam}/{mu}");
            let (a, b) = (exact.psi(&lam, &mu).to_f64().unwrap(), float.psi(&lam, &mu));
            assert!((a - b).abs() < 1e-13, "psi {lam}/{mu}");
        }
    }
}

// exact rationals
#[test]
fn t0_single_box_forms() {
    let q = rat(1, 3);
    let c = ExactCoeffs::q_t0(q.clone());
    let one = rat(1, 1);
    let qp = |k: i64| num_traits::pow(q.clone(), k as usize);
    for mu in Partition::all_up_to(6, 3) {
        let m = mu.padded(5);
        for j in 1..=mu.len() + 1 {
            if j > 1 && m[j - 2] == m[j - 1] {
                continue;
            }
            let mut l = m.clone();
            l[j - 1] += 1;
            let lam = Partition::new(l).unwrap();
            let phi = if j == 1 { &one / (&one - &q) } else { (&one - qp(m[j - 2] - m[j - 1])) / (&one - &q) };
            let psi = (&one - qp(m[j - 1] - m[j] + 1)) / (&one - &q);
            assert_eq!(c.phi(&lam, &mu), phi, "{lam}/{mu}");
            if j <= mu.len() {
                assert_eq!(c.psi(&lam, &mu), psi, "{lam}/{mu}");
            } else {
                assert_eq!(c.psi(&lam, &mu), one, "{lam}/{mu}");
            }
        }
    }
}

// doubles
#[test]
fn one_box_is_sum_for_generic_parameters() {
    let c = FloatCoeffs::new(0.3, 0.7).unwrap();
    let x = [0.1, 0.2, 0.3, 0.4];
    assert!((macdonald(&p(&[1]), &Partition::empty(), &x, &c, Which::P) - 1.0).abs() < 1e-14);
}

// exact rationals
#[test]
fn schur_pieri_example() {
    let lam = p(&[2, 1]);
    let x = [rat(1, 1), rat(2, 1), rat(3, 1)];
    let lhs = rat(6, 1) * schur_gt_sum(&lam, &x).unwrap();
    let rhs = pieri_apply(&lam, PieriRule::SchurH1, &ExactCoeffs::schur())
        .into_iter()
        .fold(rat(0, 1), |a, (nu, c)| a + c * schur_gt_sum(&nu, &x).unwrap());
    assert_eq!(lhs, rhs);
}

// exact rationals
#[test]
fn macdonald_pieri_exact_t0() {
    let c = ExactCoeffs::q_t0(rat(2, 7));
    let x = [rat(1, 3), rat(1, 2), rat(4, 5)];
    for lam in Partition::all_up_to(4, 3) {
        for rule in [PieriRule::MacdonaldG1, PieriRule::MacdonaldE1] {
            assert!(pieri_residual(&lam, rule, &c, &x).is_zero(), "{rule:?} {lam}");
        }
    }
}

// doubles
#[test]
fn g1_coefficients_match_skew_coeffs() {
    let c = FloatCoeffs::new(0.3, 0.0).unwrap();
    let lam = p(&[1]);
    let out = pieri_apply(&lam, PieriRule::MacdonaldG1, &c);
    assert_eq!(out.len(), 2);
    for (nu, coef) in out {
        assert_eq!(coef, skew_coeffs(&nu, &lam, 0.3, 0.0).unwrap().phi);
    }
}

// doubles
#[test]
fn schur_cauchy_converges() {
    let x = [0.3, 0.2];
    let res: Vec<f64> = (2..=12).map(|l| cauchy_residual(&x, &x, Family::Schur, l).unwrap()).collect();
    assert!(res.windows(2).all(|w| w[1] < w[0] || w[1] < 1e-14), "{res:?}");
    assert!(res[res.len() - 1] < 1e-8, "{res:?}");
}

// doubles
#[test]
fn macdonald_cauchy_converges() {
    let fam = Family::Macdonald { q: 0.4, t: 0.1 };
    let res: Vec<f64> = (2..=20).map(|l| cauchy_residual(&[0.2], &[0.3], fam, l).unwrap()).collect();
    assert!(res.windows(2).all(|w| w[1] < w[0] || w[1] < 1e-14), "{res:?}");
    assert!(res[res.len() - 1] < 1e-9, "{res:?}");
}

// doubles
#[test]
fn skew_cauchy_small_shapes() {
    for (q, t) in [(0.4, 0.1), (0.3, 0.3), (0.5, 0.0)] {
        let c = FloatCoeffs::new(q, t).unwrap();
        for lam in Partition::all_up_to(3, 3) {
            for nu in Partition::all_up_to(3, 3) {
                let (lhs, rhs) = skew_cauchy_sides(&lam, &nu, &[0.3], &[0.25], &c, 14).unwrap();
                assert!((lhs - rhs).abs() < 1e-8, "q={q} t={t} {lam} {nu}: {lhs} vs {rhs}");
            }
        }
    }
}
