use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::rational::{abs, int, to_f64, Rational};
use crate::symchar::normalized_cycle_char;
use crate::thoma::ThomaParams;
use crate::{Error, Exec, Result};

fn floor_times(a: &Rational, n: u32) -> u32 {
    (a * int(n as i64))
        .floor()
        .to_integer()
        .try_into()
        .expect("0 ≤ a·n ≤ n")
}

/// A partition of `n` with rows `⌊α_i n⌋`, columns `⌊β_j n⌋` and the
/// remainder laid out as a near-square block of side `⌊√r⌋`.
pub fn ergodic_shape(p: &ThomaParams, n: u32) -> Result<Partition> {
    if (n as usize) < p.count() {
        return Err(Error::OutOfRange(format!(
            "n = {n} is smaller than the {} parameters",
            p.count()
        )));
    }
    let rows: Vec<u32> = p.alpha().iter().map(|a| floor_times(a, n)).collect();
    let cols: Vec<u32> = p.beta().iter().map(|b| floor_times(b, n)).collect();
    let used: u32 = rows.iter().chain(&cols).sum();
    let r = n.checked_sub(used).ok_or_else(|| {
        Error::InvalidParams(format!("floors overshoot n = {n}"))
    })?;
    let mut parts = rows;
    parts.extend(Partition::from_unsorted(cols).conjugate().into_parts());
    if r > 0 {
        let side = r.isqrt();
        parts.extend(std::iter::repeat_n(side, (r / side) as usize));
        parts.push(r % side);
    }
    let shape = Partition::from_unsorted(parts);
    debug_assert_eq!(shape.size(), n);
    Ok(shape)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErgodicPoint {
    pub n: u32,
    pub shape: Partition,
    #[serde(with = "crate::rational::serde_str")]
    pub chi: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub deviation: Rational,
    pub deviation_float: f64,
}

/// Normalized `k`-cycle characters along [`ergodic_shape`], against the
/// limit `c_k = Σα^k + (−1)^{k−1}Σβ^k`.
pub fn ergodic_converge(p: &ThomaParams, k: u32, ns: &[u32]) -> Result<Vec<ErgodicPoint>> {
    ergodic_converge_with(p, k, ns, Exec::default())
}

pub fn ergodic_converge_with(
    p: &ThomaParams,
    k: u32,
    ns: &[u32],
    exec: Exec,
) -> Result<Vec<ErgodicPoint>> {
    if let Some(n) = ns.iter().find(|&&n| n < k) {
        return Err(Error::OutOfRange(format!("n = {n} is smaller than k = {k}")));
    }
    let limit = p.cycle_moment(k);
    exec.map(ns, |&n| {
        let shape = ergodic_shape(p, n)?;
        let chi = normalized_cycle_char(&shape, k)?;
        let deviation = abs(&(&chi - &limit));
        Ok(ErgodicPoint {
            n,
            shape,
            deviation_float: to_f64(&deviation),
            chi,
            deviation,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shape_examples() {
        let halves = ThomaParams::new(vec![ratio(1, 2), ratio(1, 2)], vec![]).unwrap();
        assert_eq!(ergodic_shape(&halves, 10).unwrap(), p(&[5, 5]));
        let col = ThomaParams::sign();
        assert_eq!(ergodic_shape(&col, 5).unwrap(), p(&[1, 1, 1, 1, 1]));
        let plancherel = ThomaParams::regular();
        assert_eq!(ergodic_shape(&plancherel, 9).unwrap(), p(&[3, 3, 3]));
        assert_eq!(ergodic_shape(&plancherel, 7).unwrap(), p(&[2, 2, 2, 1]));
        assert!(ergodic_shape(&halves, 1).is_err());
    }

    #[test]
    fn trivial_converges_immediately() {
        for pt in ergodic_converge(&ThomaParams::trivial(), 3, &[3, 7, 12]).unwrap() {
            assert_eq!(pt.chi, int(1));
            assert_eq!(pt.deviation, int(0));
        }
    }

    #[test]
    fn halves_converge() {
        let halves = ThomaParams::new(vec![ratio(1, 2), ratio(1, 2)], vec![]).unwrap();
        let pts = ergodic_converge(&halves, 2, &[10, 20, 40]).unwrap();
        assert!(pts.windows(2).all(|w| w[1].deviation <= w[0].deviation));
        assert!(pts[2].deviation_float <= 0.1);
        assert!(ergodic_converge(&halves, 5, &[4]).is_err());
    }
}
