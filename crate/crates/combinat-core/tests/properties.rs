use combinat_core::gt::interlacing_rows_below;
use combinat_core::lis::lis_quadratic;
use combinat_core::{
    brute_force_paths, lgv_determinant, lis, GtPattern, GtValidity, PathEnsembleQuery, SumProduct,
    WeightMatrix,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_matrix() -> impl Strategy<Value = WeightMatrix<i64>> {
    (1usize..=5, 1usize..=5)
        .prop_filter("at most 25 cells", |(r, c)| r * c <= 25)
        .prop_flat_map(|(r, c)| {
            prop::collection::vec(0i64..=4, r * c).prop_map(move |d| WeightMatrix::new(r, c, d).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lgv_equals_brute_force(w in small_matrix(), r in 1usize..=3) {
        prop_assume!(r <= w.cols());
        let q = PathEnsembleQuery::greene(w.rows(), r, w.cols()).unwrap();
        let big = w.map(|&x| BigInt::from(x));
        let brute = brute_force_paths(&big.map(|x| SumProduct(x.clone())), &q).unwrap().0;
        prop_assert_eq!(lgv_determinant(&big, &q).unwrap(), brute);
    }

    #[test]
    fn lis_fast_matches_quadratic(v in prop::collection::vec(-20i64..20, 0..40)) {
        prop_assert_eq!(lis(&v), lis_quadratic(&v));
    }

    #[test]
    fn lis_grows_by_one_on_new_maximum(v in prop::collection::vec(-20i64..20, 0..40)) {
        let mut w = v.clone();
        w.push(100);
        prop_assert_eq!(lis(&w), lis(&v) + 1);
    }

    #[test]
    fn sampled_patterns_validate_and_type_sums_to_size(seed in any::<u64>(), d in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = GtPattern::sample(d, d, 5, &mut rng);
        prop_assert!(p.validate().is_valid());
        let (shape, ty) = p.shape_and_type().unwrap();
        prop_assert_eq!(ty.iter().sum::<i64>(), shape.size());
    }

    #[test]
    fn perturbation_outside_interval_is_rejected(seed in any::<u64>(), d in 2usize..7, pick in any::<prop::sample::Index>(), up in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = GtPattern::sample(d, d, 5, &mut rng);
        // perturb an entry of a non-bottom row just past its interval
        let cells: Vec<(usize, usize)> = (1..d).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
        let (i, j) = cells[pick.index(cells.len())];
        let upper = *p.get(i + 1, j);
        let lower = p.try_get(i + 1, j + 1).copied().unwrap_or(0);
        let mut q = p.clone();
        q.set(i, j, if up { upper + 1 } else { lower - 1 });
        prop_assert!(!q.validate().is_valid());
    }
}

#[test]
fn random_lgv_trials_3x4() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    use rand::Rng;
    for _ in 0..50 {
        let w = WeightMatrix::from_fn(3, 4, |_, _| BigInt::from(rng.random_range(1..=9)));
        let q = PathEnsembleQuery::greene(3, 2, 4).unwrap();
        let brute = brute_force_paths(&w.map(|x| SumProduct(x.clone())), &q).unwrap().0;
        assert_eq!(lgv_determinant(&w, &q).unwrap(), brute);
    }
}

#[test]
fn below_rows_count_matches_product_formula() {
    // μ ≺ λ has ∏ (λ_j − λ_{j+1} + 1) choices
    let lambda = [5, 3, 3, 0];
    assert_eq!(interlacing_rows_below(&lambda).len(), 12);
    let p = GtPattern::from_rows(vec![vec![1], vec![1, 1]]).unwrap();
    assert_eq!(p.validate(), GtValidity::Valid);
}
