use num_bigint::BigInt;
use proptest::prelude::*;

use sinf_core::partition::Direction;
use sinf_core::rational::{from_bigint, int};
use sinf_core::symchar::{
    frobenius_character, inner_product, mn_character, CharacterTable, ClassFunction,
};
use sinf_core::Partition;

fn partition_up_to(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=max as usize).prop_filter_map("size bound", move |v| {
        let p = Partition::from_unsorted(v);
        (p.size() <= max).then_some(p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identity_class_gives_dimension(lambda in partition_up_to(12)) {
        let n = lambda.size();
        let ones = Partition::new(vec![1; n as usize]).unwrap();
        prop_assert_eq!(mn_character(&lambda, &ones).unwrap(), lambda.dim_syt());
    }
}

#[test]
fn mn_agrees_with_frobenius() {
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            for rho in Partition::all(n) {
                assert_eq!(
                    mn_character(&lambda, &rho).unwrap(),
                    frobenius_character(&lambda, &rho).unwrap(),
                    "λ={lambda}, ρ={rho}"
                );
            }
        }
    }
}

#[test]
fn rows_are_orthonormal() {
    for n in 1..=6 {
        let chars: Vec<ClassFunction> = Partition::all(n)
            .iter()
            .map(ClassFunction::irreducible)
            .collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let expect = int((i == j) as i64);
                assert_eq!(inner_product(a, b).unwrap(), expect, "n={n}, {i}, {j}");
            }
        }
    }
}

#[test]
fn columns_are_orthogonal() {
    for n in 1..=6 {
        let t = CharacterTable::new(n).unwrap();
        for (c1, rho) in t.classes.iter().enumerate() {
            for (c2, _) in t.classes.iter().enumerate() {
                let sum: i64 = t.values.iter().map(|row| row[c1] * row[c2]).sum();
                let expect = if c1 == c2 { rho.z() } else { BigInt::from(0) };
                assert_eq!(BigInt::from(sum), expect, "n={n}, ρ={rho}");
            }
        }
    }
}

/// Restricting `χ^Λ` to `S(n)` (classes extended by a fixed point) gives
/// `Σ_{Λ↘λ} χ^λ`.
#[test]
fn branching_rule() {
    for n in 0..=5u32 {
        for big in Partition::all(n + 1) {
            for rho in Partition::all(n) {
                let mut ext = rho.parts().to_vec();
                ext.push(1);
                let lhs = mn_character(&big, &Partition::from_unsorted(ext)).unwrap();
                let rhs: BigInt = big
                    .covers(Direction::Down)
                    .iter()
                    .map(|small| mn_character(small, &rho).unwrap())
                    .sum();
                assert_eq!(from_bigint(lhs), from_bigint(rhs), "Λ={big}, ρ={rho}");
            }
        }
    }
}
