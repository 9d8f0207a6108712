use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use sinf_core::partition::Direction;
use sinf_core::permutation::all_arrangements;
use sinf_core::rational::factorial;
use sinf_core::Partition;

fn partition_up_to(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=max as usize).prop_filter_map("size bound", move |v| {
        let p = Partition::from_unsorted(v);
        (p.size() <= max).then_some(p)
    })
}

/// Standard tableaux by peeling the largest entry off every corner.
fn count_syt(p: &Partition) -> BigInt {
    if p.size() == 0 {
        return BigInt::from(1);
    }
    p.covers(Direction::Down).iter().map(count_syt).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conjugate_is_an_involution(p in partition_up_to(30)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }
}

proptest! {
    #[test]
    fn covers_are_dual(p in partition_up_to(12)) {
        for big in p.covers(Direction::Up) {
            prop_assert_eq!(big.size(), p.size() + 1);
            prop_assert!(big.covers(Direction::Down).contains(&p));
        }
        for small in p.covers(Direction::Down) {
            prop_assert!(small.covers(Direction::Up).contains(&p));
        }
    }

    #[test]
    fn hook_length_matches_tableau_count(p in partition_up_to(10)) {
        prop_assert_eq!(p.dim_syt(), count_syt(&p));
    }
}

#[test]
fn class_sizes_fill_the_group() {
    for n in 0..=8 {
        let nf = factorial(n);
        let total: BigInt = Partition::all(n).iter().map(|l| &nf / l.z()).sum();
        assert_eq!(total, nf, "n = {n}");
    }
}

#[test]
fn squared_dimensions_fill_the_group() {
    for n in 0..=8 {
        let total: BigInt = Partition::all(n).iter().map(|l| l.dim_syt().pow(2)).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    Partition::from_unsorted(lengths)
}

/// `z_λ` is the centralizer order: `n!/z_λ` permutations have cycle type λ.
#[test]
fn z_counts_centralizers() {
    for n in 1..=6u32 {
        let mut tally = std::collections::BTreeMap::<Partition, u64>::new();
        for p in all_arrangements(n as usize) {
            *tally.entry(cycle_type(&p)).or_default() += 1;
        }
        let nf = factorial(n);
        for lambda in Partition::all(n) {
            let count = BigInt::from(tally.get(&lambda).copied().unwrap_or(0));
            assert!(!count.is_zero());
            assert_eq!(&nf / lambda.z(), count, "λ = {lambda}");
        }
    }
}
