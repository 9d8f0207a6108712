//! Double cosets of the hyperoctahedral subgroup `K(n) ⊂ S(±1..±n)`.
//!
//! The double coset of `g` is determined by the join of the base matching
//! `{{i, −i}}` with its image `{{g(i), g(−i)}}`: every block of the join
//! has even size, and halving the sizes gives a partition of `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::permutation::{unrank, Permutation};
use crate::rational::{factorial, from_bigint, int, pow, Rational};
use crate::thoma::ThomaMeasure;
use crate::{Error, Exec, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CosetType {
    pub lambda: Partition,
    /// `ℓ(λ)`, the number of blocks of the join.
    pub length: usize,
}

impl CosetType {
    fn new(lambda: Partition) -> Self {
        let length = lambda.len();
        CosetType { lambda, length }
    }
}

/// Default census limit; [`census`] accepts one more with `long_run`.
pub const CENSUS_MAX: u32 = 4;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Coset type of a permutation of positions `0..2n`, where positions `p`
/// and `2n-1-p` carry the indices `±i`.
fn type_of_positions(images: &[usize]) -> Partition {
    let m = images.len();
    let mut parent: Vec<usize> = (0..m).collect();
    for p in 0..m / 2 {
        let q = m - 1 - p;
        for (a, b) in [(p, q), (images[p], images[q])] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    let mut sizes: BTreeMap<usize, u32> = BTreeMap::new();
    for x in 0..m {
        let r = find(&mut parent, x);
        *sizes.entry(r).or_default() += 1;
    }
    Partition::from_unsorted(sizes.into_values().map(|s| s / 2).collect())
}

fn position(i: i64, n: u32) -> usize {
    let n = n as i64;
    (if i < 0 { i + n } else { i + n - 1 }) as usize
}

/// Coset type of `g ∈ G(n)`, the permutations of `±1..±n` (fixing 0).
pub fn coset_type(g: &Permutation, n: u32) -> Result<CosetType> {
    if let Some(x) = g.support().find(|&x| x == 0 || x.unsigned_abs() > n as u64) {
        return Err(Error::InvalidPermutation(format!(
            "{x} is outside ±1..±{n}; g must permute ±1..±{n} and fix 0"
        )));
    }
    let images: Vec<usize> = (-(n as i64)..=n as i64)
        .filter(|&i| i != 0)
        .map(|i| position(g.apply(i), n))
        .collect();
    Ok(CosetType::new(type_of_positions(&images)))
}

/// Every element of `G(n)`, in lexicographic order of image vectors.
pub fn group_elements(n: u32) -> Vec<Permutation> {
    let pts: Vec<i64> = (-(n as i64)..=n as i64).filter(|&i| i != 0).collect();
    crate::permutation::all_arrangements(pts.len())
        .into_iter()
        .map(|img| {
            let images: Vec<i64> = img.iter().map(|&q| pts[q]).collect();
            Permutation::from_images(&pts, &images).expect("bijection of pts")
        })
        .collect()
}

/// `|K λ K| = 2^{2n−ℓ(λ)} (n!)² / z_λ`.
pub fn coset_size(lambda: &Partition, n: u32) -> Result<BigInt> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda} is not a partition of {n}")));
    }
    let nf = factorial(n);
    let two = BigInt::from(2).pow(2 * n - lambda.len() as u32);
    Ok(two * &nf * &nf / lambda.z())
}

/// Coefficients of `Σ_{g∈G(n)} t^{ℓ(g)} = n! 2ⁿ t(t+2)⋯(t+2n−2)`, keyed by
/// the power of `t` (zero coefficients omitted).
pub fn coset_poly(n: u32) -> BTreeMap<usize, BigInt> {
    // ascending coefficients of ∏_{j<n} (t + 2j)
    let mut poly = vec![BigInt::one()];
    for j in 0..n {
        let c = BigInt::from(2 * j);
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k + 1] += a;
            next[k] += a * &c;
        }
        poly = next;
    }
    let scale = factorial(n) * BigInt::from(2).pow(n);
    poly.into_iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| (k, a * &scale))
        .collect()
}

/// Exhaustive tally of coset types over all `(2n)!` elements of `G(n)`.
/// Limited to `n ≤ 4`, or `n ≤ 5` with `long_run`.
pub fn census(n: u32, long_run: bool) -> Result<BTreeMap<Partition, u64>> {
    census_with(n, long_run, Exec::default())
}

pub fn census_with(n: u32, long_run: bool, exec: Exec) -> Result<BTreeMap<Partition, u64>> {
    let limit = if long_run { CENSUS_MAX + 1 } else { CENSUS_MAX };
    if n > limit {
        return Err(Error::Budget(format!(
            "census over S({}) exceeds the limit n ≤ {limit}",
            2 * n
        )));
    }
    let m = 2 * n as usize;
    let total: usize = (1..=m).product();
    Ok(exec.fold_range(
        0..total,
        BTreeMap::new,
        |mut acc, idx| {
            let mut images = Vec::with_capacity(m);
            unrank(idx, m, &mut images);
            *acc.entry(type_of_positions(&images)).or_insert(0u64) += 1;
            acc
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    ))
}

/// Census tallies grouped by `ℓ`.
pub fn census_by_length(tally: &BTreeMap<Partition, u64>) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for (lambda, &c) in tally {
        *out.entry(lambda.len()).or_insert(0) += c;
    }
    out
}

/// The bi-invariant extension of the spherical function of `μ`:
/// `∏_{k∈λ(g)} c_k` over the parts of the coset type.
pub fn spherical_value_e(mu: &ThomaMeasure, g: &Permutation, n: u32) -> Result<Rational> {
    let t = coset_type(g, n)?;
    t.lambda.parts().iter().map(|&k| mu.moment(k)).product()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivitySum {
    #[serde(with = "crate::rational::serde_str")]
    pub closed: Rational,
    #[serde(with = "crate::rational::serde_opt", skip_serializing_if = "Option::is_none")]
    pub brute: Option<Rational>,
}

/// Largest `n` for which [`positivity_sum`] also enumerates.
pub const POSITIVITY_BRUTE_MAX: u32 = 3;

/// `Σ_{g∈G(n)} x^{n−ℓ(g)} = n! 2ⁿ ∏_{j<n}(1 + 2jx)`; the brute-force side is
/// included for `n ≤ 3`.
pub fn positivity_sum(x: &Rational, n: u32) -> Result<PositivitySum> {
    if x.is_zero() || x.abs() > Rational::one() {
        return Err(Error::OutOfRange("x must lie in [-1,1] \\ {0}".into()));
    }
    let closed = from_bigint(factorial(n) * BigInt::from(2).pow(n))
        * (0..n as i64).map(|j| int(1) + int(2 * j) * x).product::<Rational>();
    let brute = if n <= POSITIVITY_BRUTE_MAX {
        let tally = census(n, false)?;
        Some(
            census_by_length(&tally)
                .into_iter()
                .map(|(l, c)| pow(x, n - l as u32) * int(c as i64))
                .sum(),
        )
    } else {
        None
    };
    Ok(PositivitySum { closed, brute })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::thoma::ThomaParams;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn coset_type_examples() {
        let id = Permutation::identity();
        assert_eq!(coset_type(&id, 3).unwrap().lambda, p(&[1, 1, 1]));
        let flip = Permutation::transposition(1, -1);
        assert_eq!(coset_type(&flip, 1).unwrap().lambda, p(&[1]));
        let g = Permutation::from_cycles(&[&[1, 2, 3], &[4, 5]]).unwrap();
        let t = coset_type(&g, 5).unwrap();
        assert_eq!(t.lambda, p(&[3, 2]));
        assert_eq!(t.length, 2);
        assert!(coset_type(&g, 4).is_err());
        assert!(coset_type(&Permutation::transposition(0, 1), 2).is_err());
    }

    #[test]
    fn sizes_examples() {
        assert_eq!(coset_size(&p(&[2]), 2).unwrap(), BigInt::from(16));
        assert_eq!(coset_size(&p(&[1, 1]), 2).unwrap(), BigInt::from(8));
        assert_eq!(coset_size(&p(&[1]), 1).unwrap(), BigInt::from(2));
        assert!(coset_size(&p(&[1]), 2).is_err());
    }

    #[test]
    fn poly_examples() {
        let c = coset_poly(2);
        assert_eq!(c, [(1, BigInt::from(16)), (2, BigInt::from(8))].into());
        assert_eq!(coset_poly(1), [(1, BigInt::from(2))].into());
        let c3 = coset_poly(3);
        assert_eq!(c3[&1], BigInt::from(384));
        assert_eq!(c3[&2], BigInt::from(288));
        assert_eq!(c3[&3], BigInt::from(48));
    }

    #[test]
    fn census_matches_sizes() {
        for n in 1..=3 {
            let tally = census(n, false).unwrap();
            for lambda in Partition::all(n) {
                assert_eq!(BigInt::from(tally[&lambda]), coset_size(&lambda, n).unwrap());
            }
        }
        assert!(census(5, false).is_err());
    }

    #[test]
    fn census_strategies_agree() {
        assert_eq!(
            census_with(3, false, Exec::Sequential).unwrap(),
            census_with(3, false, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn spherical_examples() {
        let mu = ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 3)]).unwrap();
        let m = mu.to_measure();
        assert_eq!(spherical_value_e(&m, &Permutation::identity(), 3).unwrap(), int(1));
        let g = Permutation::from_cycles(&[&[1, 2, 3]]).unwrap();
        assert_eq!(
            spherical_value_e(&m, &g, 3).unwrap(),
            mu.char_value(&p(&[3])).unwrap()
        );
        // all mass at one point x: the value is x^{n-ℓ(g)}
        let x = ratio(-1, 4);
        let single = ThomaMeasure::new([(x.clone(), int(1))], int(0)).unwrap();
        for g in [
            Permutation::identity(),
            Permutation::from_cycles(&[&[1, -2], &[2, -1]]).unwrap(),
            Permutation::from_cycles(&[&[1, 2, -3]]).unwrap(),
            Permutation::transposition(1, -1),
        ] {
            let t = coset_type(&g, 3).unwrap();
            assert_eq!(
                spherical_value_e(&single, &g, 3).unwrap(),
                pow(&x, 3 - t.length as u32)
            );
        }
    }

    #[test]
    fn positivity_examples() {
        assert_eq!(positivity_sum(&ratio(-1, 2), 2).unwrap().closed, int(0));
        let s = positivity_sum(&ratio(-1, 3), 3).unwrap();
        assert_eq!(s.closed, ratio(-16, 3));
        assert_eq!(s.brute, Some(ratio(-16, 3)));
        assert!(positivity_sum(&int(0), 2).is_err());
        assert!(positivity_sum(&ratio(1, 2), 4).unwrap().brute.is_none());
    }
}
