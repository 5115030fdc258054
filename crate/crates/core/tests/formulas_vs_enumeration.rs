//! Closed forms and recursions agree with brute-force enumeration through
//! the public API.

use combinat::counting::{
    bell, binomial, cycle_count, derangement_fixed, multiset_coeff, stirling2, surjection_count,
};
use combinat::enumeration::{
    enumerate_functions, enumerate_multisets, enumerate_permutations, enumerate_set_partitions,
    enumerate_subsets, FunctionMode, PermFilter,
};
use combinat::exact::{int, ExactRat};
use combinat::poset::FinitePoset;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn count<I: Iterator>(it: I) -> combinat::ExactInt {
    int(it.count() as u64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subsets_and_multisets(n in 0usize..9, k in 0usize..6) {
        prop_assert_eq!(count(enumerate_subsets(n, Some(k)).unwrap()), binomial(n, k));
        prop_assert_eq!(count(enumerate_multisets(n, k).unwrap()), multiset_coeff(n, k));
    }

    #[test]
    fn functions(k in 0usize..6, n in 1usize..5) {
        prop_assert_eq!(
            count(enumerate_functions(k, n, FunctionMode::Surjective).unwrap()),
            surjection_count(k, n)
        );
        let injective = count(enumerate_functions(k, n, FunctionMode::Injective).unwrap());
        prop_assert_eq!(injective, combinat::counting::falling_factorial(n, k));
    }

    #[test]
    fn partitions(n in 0usize..8, k in 0usize..8) {
        prop_assert_eq!(count(enumerate_set_partitions(n, Some(k), None).unwrap()), stirling2(n, k));
        prop_assert_eq!(count(enumerate_set_partitions(n, None, None).unwrap()), bell(n));
    }

    #[test]
    fn permutations(n in 0usize..7, k in 0usize..7) {
        let cycles = PermFilter { cycles: Some(k), ..PermFilter::default() };
        prop_assert_eq!(count(enumerate_permutations(n, cycles).unwrap()), cycle_count(n, k));
        let fixed = PermFilter { fixed_points: Some(k), ..PermFilter::default() };
        prop_assert_eq!(count(enumerate_permutations(n, fixed).unwrap()), derangement_fixed(n, k));
    }

    #[test]
    fn poset_inversion_roundtrip(seed in any::<u64>(), values in prop::collection::vec(-20i64..20, 7)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let poset = FinitePoset::random(&mut rng, 7, 0.35);
        let f: Vec<ExactRat> = values.iter().map(|&v| ExactRat::from_integer(v.into())).collect();
        prop_assert_eq!(&poset.invert(&poset.accumulate(&f).unwrap()).unwrap(), &f);
        prop_assert_eq!(&poset.invert_dual(&poset.accumulate_dual(&f).unwrap()).unwrap(), &f);
    }
}
