//! Integer partitions and Young diagram combinatorics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::factorial;
use crate::{Error, Result};

/// A partition stored as weakly decreasing positive parts. The empty list is
/// the empty partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(k)`, a single row.
    pub fn row(k: u32) -> Self {
        Self::from_unsorted(vec![k])
    }

    /// `(1^k)`, a single column.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of rows, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let cols = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Parts of size at least 2, i.e. the nontrivial cycles of a cycle type.
    pub fn nontrivial(&self) -> Self {
        Partition(self.0.iter().copied().filter(|&p| p >= 2).collect())
    }

    /// Pads with parts equal to 1 up to size `n`.
    pub fn pad_to(&self, n: u32) -> Result<Self> {
        let s = self.size();
        if s > n {
            return Err(Error::SizeMismatch(format!("{self} has size {s} > {n}")));
        }
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, (n - s) as usize));
        Ok(Partition(parts))
    }

    /// Multiplicities `m_i` as `(i, m_i)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the centralizer order of the class `λ`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| {
                acc * num_traits::pow(BigInt::from(i), m as usize) * factorial(m)
            })
    }

    /// `(z_λ, ℓ(λ))`.
    pub fn z_and_length(&self) -> (BigInt, usize) {
        (self.z(), self.len())
    }

    pub fn hook(&self, row: usize, col: usize) -> u32 {
        let arm = self.0[row] - 1 - col as u32;
        let leg = self.0[row + 1..].iter().take_while(|&&p| p > col as u32).count() as u32;
        arm + leg + 1
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn dim_syt(&self) -> BigInt {
        let mut hooks = BigInt::one();
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len as usize {
                hooks *= BigInt::from(self.hook(r, c));
            }
        }
        factorial(self.size()) / hooks
    }

    /// Diagrams obtained by adding (`Up`) or removing (`Down`) one box.
    pub fn covers(&self, direction: Direction) -> Vec<Partition> {
        let n = self.len();
        let mut out = Vec::new();
        match direction {
            Direction::Down => {
                for i in 0..n {
                    if self.part(i) > self.part(i + 1) {
                        let mut parts = self.0.clone();
                        parts[i] -= 1;
                        out.push(Partition::from_unsorted(parts));
                    }
                }
            }
            Direction::Up => {
                for i in 0..=n {
                    if i == 0 || self.part(i - 1) > self.part(i) {
                        let mut parts = self.0.clone();
                        if i == n {
                            parts.push(1);
                        } else {
                            parts[i] += 1;
                        }
                        out.push(Partition(parts));
                    }
                }
            }
        }
        out
    }

    /// Union of the part multisets, `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses `"3,1"`; the empty string and `"-"` give the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Counts standard Young tableaux by removing the largest entry from
    /// every corner in turn.
    fn syt_brute(shape: &Partition) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        shape.covers(Direction::Down).iter().map(syt_brute).sum()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::parse("3,x").is_err());
        assert_eq!(Partition::parse("3,1").unwrap(), p(&[3, 1]));
    }

    #[test]
    fn z_and_length_examples() {
        assert_eq!(p(&[2, 1, 1]).z_and_length(), (BigInt::from(4), 3));
        assert_eq!(p(&[5]).z_and_length(), (BigInt::from(5), 1));
        assert_eq!(Partition::column(5).z_and_length(), (BigInt::from(120), 5));
    }

    #[test]
    fn dim_syt_matches_enumeration() {
        assert_eq!(p(&[2, 1]).dim_syt(), BigInt::from(2));
        assert_eq!(p(&[2, 2]).dim_syt(), BigInt::from(2));
        assert_eq!(p(&[6]).dim_syt(), BigInt::from(1));
        for n in 0..=8 {
            for lambda in Partition::all(n) {
                assert_eq!(lambda.dim_syt(), BigInt::from(syt_brute(&lambda)), "{lambda}");
            }
        }
    }

    #[test]
    fn covers_examples() {
        assert_eq!(p(&[2, 1]).covers(Direction::Down), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(p(&[1]).covers(Direction::Up), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[1]).covers(Direction::Down), vec![Partition::empty()]);
        assert!(Partition::empty().covers(Direction::Down).is_empty());
    }

    #[test]
    fn covers_are_dual() {
        for n in 0..=6 {
            for small in Partition::all(n) {
                for big in Partition::all(n + 1) {
                    let down = big.covers(Direction::Down).contains(&small);
                    let up = small.covers(Direction::Up).contains(&big);
                    assert_eq!(down, up, "{small} / {big}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_and_dimensions_sum_to_factorial() {
        for n in 0..=8u32 {
            let fact = factorial(n);
            let classes: BigInt = Partition::all(n).iter().map(|l| &fact / l.z()).sum();
            assert_eq!(classes, fact);
            let squares: BigInt = Partition::all(n).iter().map(|l| l.dim_syt().pow(2)).sum();
            assert_eq!(squares, fact);
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn union_of_parts() {
        assert_eq!(p(&[2, 1]).union(&p(&[2])), p(&[2, 2, 1]));
    }
}
