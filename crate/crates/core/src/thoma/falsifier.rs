use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::permutation::{arrangement_cycles, arrangement_sign, unrank, Permutation};
use crate::rational::{self, factorial, from_bigint, int, pow, Rational};
use crate::thoma::{generalized_moment, TestFunction, ThomaMeasure};
use crate::{Error, Exec, Result};

/// Largest `m` accepted by [`alt_falsifier`] (the brute side sums over
/// `S(m)`).
pub const FALSIFIER_MAX_M: u32 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FalsifierValues {
    #[serde(with = "rational::serde_str")]
    pub closed: Rational,
    #[serde(with = "rational::serde_str")]
    pub brute: Rational,
}

impl FalsifierValues {
    pub fn agree(&self) -> bool {
        self.closed == self.brute
    }
}

fn index_perm(idx: usize, m: usize) -> Vec<usize> {
    let mut p = Vec::with_capacity(m);
    unrank(idx, m, &mut p);
    p
}

fn closed_form(x: &Rational, nu: &Rational, m: u32) -> Rational {
    // falling factorial for x > 0, rising for x < 0
    let step = if x.is_positive() { int(-1) } else { int(1) };
    let mut prod = Rational::one();
    let mut f = nu.clone();
    for _ in 0..m {
        prod *= &f;
        f += &step;
    }
    pow(&x.abs(), m) * prod / from_bigint(factorial(m))
}

/// `(1/m!) Σ_{σ∈S(m)} sgn(σ) ∫…` evaluated with every test function the
/// indicator of the atom `x` of mass `ν|x|`.
///
/// For `x > 0` this is `x^m ν(ν-1)…(ν-m+1)/m!`, negative for suitable
/// non-integral `ν`. At `x < 0` the sign of `σ` cancels against the odd
/// powers of `x` and the closed form becomes the rising factorial
/// `|x|^m ν(ν+1)…(ν+m-1)/m!`.
pub fn alt_falsifier(x: &Rational, nu: &Rational, m: u32) -> Result<FalsifierValues> {
    alt_falsifier_with(x, nu, m, Exec::default())
}

pub fn alt_falsifier_with(x: &Rational, nu: &Rational, m: u32, exec: Exec) -> Result<FalsifierValues> {
    if x.is_zero() {
        return Err(Error::OutOfRange("x must be nonzero".into()));
    }
    if m > FALSIFIER_MAX_M {
        return Err(Error::Budget(format!("m = {m} exceeds {FALSIFIER_MAX_M}")));
    }
    if !nu.is_positive() {
        return Err(Error::OutOfRange("ν must be positive".into()));
    }
    let mass = nu * x.abs();
    let rest = Rational::one() - &mass;
    let mu = ThomaMeasure::new_unnormalized(
        [(x.clone(), mass)],
        if rest.is_negative() { Rational::zero() } else { rest },
    )?;
    let fs: BTreeMap<u64, TestFunction> = (1..=m as u64)
        .map(|j| (j, TestFunction::indicator(x.clone())))
        .collect();
    let points: Vec<i64> = (1..=m as i64).collect();
    let n = m as usize;
    let total: usize = (1..=n).product();
    let sum = exec.fold_range(
        0..total,
        Rational::zero,
        |acc, idx| {
            let p = index_perm(idx, n);
            let images: Vec<i64> = p.iter().map(|&i| i as i64 + 1).collect();
            let sigma = Permutation::from_images(&points, &images).expect("bijection");
            let v = generalized_moment(&mu, &sigma, &fs).expect("σ ∈ S(∞)");
            if arrangement_sign(&p) < 0 {
                acc - v
            } else {
                acc + v
            }
        },
        |a, b| a + b,
    );
    Ok(FalsifierValues {
        closed: closed_form(x, nu, m),
        brute: sum / from_bigint(factorial(m)),
    })
}

/// `x(x+1)…(x+m-1)`.
pub fn stirling_closed(x: &Rational, m: u32) -> Rational {
    (0..m as i64).map(|i| x + int(i)).product()
}

/// `Σ_{σ∈S(m)} x^{ℓ(σ)}` by enumeration, `ℓ` the number of cycles.
pub fn stirling_brute(x: &Rational, m: u32) -> Result<Rational> {
    if m > FALSIFIER_MAX_M {
        return Err(Error::Budget(format!("m = {m} exceeds {FALSIFIER_MAX_M}")));
    }
    let n = m as usize;
    let total: usize = (1..=n).product();
    // tally cycle counts first, then evaluate once per count
    let tally = Exec::default().fold_range(
        0..total,
        || vec![0u64; n + 1],
        |mut acc, idx| {
            acc[arrangement_cycles(&index_perm(idx, n))] += 1;
            acc
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(tally
        .iter()
        .enumerate()
        .map(|(l, &c)| pow(x, l as u32) * int(c as i64))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn integral_nu_vanishes() {
        let v = alt_falsifier(&ratio(1, 4), &int(2), 3).unwrap();
        assert_eq!(v.closed, int(0));
        assert!(v.agree());
    }

    #[test]
    fn half_integer_nu_goes_negative() {
        let v = alt_falsifier(&ratio(1, 5), &ratio(3, 2), 3).unwrap();
        assert_eq!(v.closed, ratio(-1, 2000));
        assert!(v.agree());
    }

    #[test]
    fn negative_atoms_use_rising_factorial() {
        let v = alt_falsifier(&ratio(-1, 3), &ratio(1, 2), 4).unwrap();
        assert!(v.agree());
        assert!(v.closed.is_positive());
    }

    #[test]
    fn strategies_agree() {
        let a = alt_falsifier_with(&ratio(2, 7), &ratio(5, 3), 5, Exec::Sequential).unwrap();
        let b = alt_falsifier_with(&ratio(2, 7), &ratio(5, 3), 5, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.agree());
    }

    #[test]
    fn stirling_identity() {
        for m in 0..=6 {
            for x in [ratio(1, 3), ratio(-5, 2), int(2)] {
                assert_eq!(stirling_brute(&x, m).unwrap(), stirling_closed(&x, m));
            }
        }
    }

    #[test]
    fn guards() {
        assert!(alt_falsifier(&int(0), &int(1), 2).is_err());
        assert!(alt_falsifier(&ratio(1, 2), &int(1), 10).is_err());
    }
}
