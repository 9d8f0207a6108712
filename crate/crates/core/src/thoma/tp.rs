use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::det;
use crate::rational::{self, Rational};
use crate::{Error, Exec, Result};

/// A minor of the Toeplitz matrix `[a_{j-i}]` with negative value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TpWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TpReport {
    pub totally_positive: bool,
    pub minors_checked: u64,
    pub witness: Option<TpWitness>,
}

/// Index subsets of `0..n` of size `k`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Value of the minor of `[a_{j-i}]` on the given rows and columns.
pub fn toeplitz_minor(a: &[Rational], rows: &[usize], cols: &[usize]) -> Rational {
    let entry = |i: usize, j: usize| {
        if j >= i {
            a[j - i].clone()
        } else {
            Rational::zero()
        }
    };
    det(rows
        .iter()
        .map(|&i| cols.iter().map(|&j| entry(i, j)).collect())
        .collect())
}

/// [`is_totally_positive_with`] using the default execution strategy.
pub fn is_totally_positive(a: &[Rational], window: usize, max_order: usize) -> Result<TpReport> {
    is_totally_positive_with(a, window, max_order, Exec::default())
}

/// Checks every minor of order `≤ max_order` of the `window × window`
/// Toeplitz matrix `[a_{j-i}]`. The reported witness is the first negative
/// minor by (order, rows, cols) in lexicographic order.
pub fn is_totally_positive_with(
    a: &[Rational],
    window: usize,
    max_order: usize,
    exec: Exec,
) -> Result<TpReport> {
    if a.len() < window {
        return Err(Error::InsufficientCoefficients {
            needed: window,
            have: a.len(),
        });
    }
    if !a.first().is_some_and(Signed::is_positive) {
        return Err(Error::OutOfRange("a_0 must be positive".into()));
    }
    let mut checked = 0u64;
    for k in 1..=max_order.min(window) {
        let sets = subsets(window, k);
        // per row set: first failing column set, plus how many were tested
        let scan: Vec<(u64, Option<TpWitness>)> = exec.map(&sets, |rows| {
            let mut n = 0u64;
            for cols in &sets {
                n += 1;
                let v = toeplitz_minor(a, rows, cols);
                if v.is_negative() {
                    return (
                        n,
                        Some(TpWitness {
                            rows: rows.clone(),
                            cols: cols.clone(),
                            value: v,
                        }),
                    );
                }
            }
            (n, None)
        });
        for (n, witness) in scan {
            checked += n;
            if witness.is_some() {
                return Ok(TpReport {
                    totally_positive: false,
                    minors_checked: checked,
                    witness,
                });
            }
        }
    }
    Ok(TpReport {
        totally_positive: true,
        minors_checked: checked,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::thoma::{mseq_from_params, ThomaParams};

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn all_ones_is_tp() {
        let r = is_totally_positive(&vec![int(1); 10], 10, 4).unwrap();
        assert!(r.totally_positive);
    }

    #[test]
    fn exponential_is_tp() {
        let e = mseq_from_params(&ThomaParams::regular(), 9);
        assert!(is_totally_positive(&e, 10, 4).unwrap().totally_positive);
    }

    #[test]
    fn gap_sequence_fails() {
        let mut a = vec![int(0); 10];
        a[0] = int(1);
        a[1] = int(1);
        a[3] = int(1);
        let r = is_totally_positive(&a, 10, 4).unwrap();
        assert!(!r.totally_positive);
        let w = r.witness.unwrap();
        assert_eq!(w.value, int(-1));
        assert_eq!(toeplitz_minor(&a, &w.rows, &w.cols), int(-1));
        // the minor det[[a2, a3], [a0, a1]]
        assert_eq!(toeplitz_minor(&a, &[0, 2], &[2, 3]), int(-1));
    }

    #[test]
    fn strategies_agree() {
        let p = ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 3)]).unwrap();
        let mut a = mseq_from_params(&p, 7);
        a[4] = -a[4].clone();
        let s = is_totally_positive_with(&a, 8, 3, Exec::Sequential).unwrap();
        let q = is_totally_positive_with(&a, 8, 3, Exec::Parallel).unwrap();
        assert_eq!(s, q);
        assert!(!s.totally_positive);
    }

    #[test]
    fn input_checks() {
        assert!(is_totally_positive(&[int(1)], 3, 2).is_err());
        assert!(is_totally_positive(&[int(0), int(1)], 2, 2).is_err());
    }
}
