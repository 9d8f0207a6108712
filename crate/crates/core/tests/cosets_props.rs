use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use sinf_core::cosets::{census, census_by_length, coset_poly, coset_size, coset_type, positivity_sum};
use sinf_core::random;
use sinf_core::rational::{factorial, int, ratio};
use sinf_core::{Partition, Permutation};

/// A random element of `K(n)`: commutes with `i ↦ −i`.
fn random_k(rng: &mut impl Rng, n: u32) -> Permutation {
    let mut targets: Vec<i64> = (1..=n as i64).collect();
    targets.shuffle(rng);
    let pairs = (1..=n as i64).zip(targets).flat_map(|(i, t)| {
        let t = if rng.gen_bool(0.5) { -t } else { t };
        [(i, t), (-i, -t)]
    });
    Permutation::from_pairs(pairs.collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coset_type_is_bi_invariant(n in 1u32..=4, seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = random::signed_permutation(&mut rng, n);
        let (k1, k2) = (random_k(&mut rng, n), random_k(&mut rng, n));
        let moved = k1.compose(&g).compose(&k2);
        prop_assert_eq!(coset_type(&moved, n).unwrap(), coset_type(&g, n).unwrap());
    }
}

#[test]
fn sizes_partition_the_group() {
    for n in 1..=5 {
        let total: BigInt = Partition::all(n).iter().map(|l| coset_size(l, n).unwrap()).sum();
        assert_eq!(total, factorial(2 * n), "n = {n}");
    }
}

#[test]
fn poly_matches_census_by_length() {
    for n in 1..=4 {
        let by_length = census_by_length(&census(n, false).unwrap());
        let poly = coset_poly(n);
        assert_eq!(poly.len(), by_length.len());
        for (l, c) in by_length {
            assert_eq!(poly[&l], BigInt::from(c), "n={n}, ℓ={l}");
        }
    }
}

/// At `x = −1/(2k)` the product `∏(1 + 2jx)` vanishes from `j = k` on and
/// is positive before.
#[test]
fn positivity_sum_terminates() {
    for k in 1..=4 {
        let x = ratio(-1, 2 * k);
        for n in 1..=8 {
            let s = positivity_sum(&x, n).unwrap().closed;
            assert!(!s.is_negative(), "k={k}, n={n}");
            if n as i64 > k {
                assert_eq!(s, int(0), "k={k}, n={n}");
            } else {
                assert!(s.is_positive(), "k={k}, n={n}");
            }
        }
    }
}
