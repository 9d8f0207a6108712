//! Finitely supported bijections of the integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::partition::Partition;
use crate::{Error, Result};

/// A bijection of `ℤ` moving finitely many points. Only moved points are
/// stored, so equal permutations compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: BTreeMap<i64, i64>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds from `(x, g(x))` pairs; pairs with `x == g(x)` are allowed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (x, y) in pairs {
            if map.insert(x, y).is_some() {
                return Err(Error::InvalidPermutation(format!("{x} listed twice")));
            }
        }
        let domain: BTreeSet<i64> = map.keys().copied().collect();
        let image: BTreeSet<i64> = map.values().copied().collect();
        if domain != image {
            return Err(Error::InvalidPermutation(
                "image of the support differs from the support".into(),
            ));
        }
        map.retain(|x, y| x != y);
        Ok(Permutation { map })
    }

    /// Product of the given cycles, each written `(a b c)` as `a -> b -> c -> a`.
    pub fn from_cycles(cycles: &[&[i64]]) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut seen = BTreeSet::new();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if !seen.insert(a) {
                    return Err(Error::InvalidPermutation(format!("{a} appears in two cycles")));
                }
                pairs.push((a, cycle[(i + 1) % cycle.len()]));
            }
        }
        Self::from_pairs(pairs)
    }

    /// The transposition `(a b)`.
    pub fn transposition(a: i64, b: i64) -> Self {
        Self::from_cycles(&[&[a, b]]).expect("distinct points")
    }

    /// Permutation of `points` sending `points[i]` to `images[i]`.
    pub fn from_images(points: &[i64], images: &[i64]) -> Result<Self> {
        Self::from_pairs(points.iter().copied().zip(images.iter().copied()))
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.map.get(&x).copied().unwrap_or(x)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.map.keys().copied()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            map: self.map.iter().map(|(&x, &y)| (y, x)).collect(),
        }
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let points: BTreeSet<i64> = self.support().chain(other.support()).collect();
        let map = points
            .into_iter()
            .map(|x| (x, self.apply(other.apply(x))))
            .filter(|(x, y)| x != y)
            .collect();
        Permutation { map }
    }

    /// Nontrivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// `[σ]`: lengths of the nontrivial cycles.
    pub fn nontrivial_cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// Full cycle type on the `ambient` set (fixed points included) and the
    /// nontrivial part `[σ]`.
    pub fn cycle_type(&self, ambient: &[i64]) -> Result<(Partition, Partition)> {
        let amb: BTreeSet<i64> = ambient.iter().copied().collect();
        if let Some(x) = self.support().find(|x| !amb.contains(x)) {
            return Err(Error::InvalidPermutation(format!(
                "moves {x}, outside the ambient set"
            )));
        }
        let nontrivial = self.nontrivial_cycle_type();
        let fixed = amb.len() as u32 - nontrivial.size();
        let full = nontrivial.pad_to(nontrivial.size() + fixed)?;
        Ok((full, nontrivial))
    }

    /// Cycle type as an element of `S(n)` acting on `{1..n}`.
    pub fn cycle_type_sn(&self, n: u32) -> Result<(Partition, Partition)> {
        let ambient: Vec<i64> = (1..=n as i64).collect();
        self.cycle_type(&ambient)
    }

    /// Sign of the permutation.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Member of `G^E`: fixes 0.
    pub fn in_ge(&self) -> bool {
        self.apply(0) == 0
    }

    /// Member of `G^D`: fixes 0 and maps positive integers to positive integers.
    pub fn in_gd(&self) -> bool {
        self.in_ge() && self.map.iter().all(|(&x, &y)| (x > 0) == (y > 0))
    }

    /// Member of `K`: commutes with `i ↦ -i`.
    pub fn in_k(&self) -> bool {
        self.map.keys().all(|&x| self.apply(-x) == -self.apply(x))
    }

    /// Member of `G(n)`: supported in `{-n..n}`.
    pub fn in_window(&self, n: u32) -> bool {
        self.map.keys().all(|x| x.unsigned_abs() <= n as u64)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All permutations of `0..n` as image vectors, in lexicographic order.
pub fn all_arrangements(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// The `index`-th permutation of `0..n` in lexicographic order, written into
/// `out`.
pub fn unrank(mut index: usize, n: usize, out: &mut Vec<usize>) {
    out.clear();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut fact: usize = (1..n).product::<usize>().max(1);
    for k in (0..n).rev() {
        let pos = index / fact;
        index %= fact;
        out.push(pool.remove(pos));
        if k > 0 {
            fact /= k.max(1);
        }
    }
}

/// Sign of a permutation of `0..n` given as an image vector.
pub fn arrangement_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut parity = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        parity += len - 1;
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of cycles (fixed points included) of an image vector.
pub fn arrangement_cycles(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if !seen[start] {
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_examples() {
        let g = Permutation::from_cycles(&[&[1, 2, 3], &[4, 5]]).unwrap();
        let (full, nt) = g.cycle_type_sn(5).unwrap();
        assert_eq!(full, Partition::new(vec![3, 2]).unwrap());
        assert_eq!(nt, Partition::new(vec![3, 2]).unwrap());

        let (full, nt) = Permutation::identity().cycle_type_sn(4).unwrap();
        assert_eq!(full, Partition::column(4));
        assert!(nt.is_empty());

        let (full, nt) = Permutation::transposition(1, 2).cycle_type_sn(2).unwrap();
        assert_eq!(full, Partition::row(2));
        assert_eq!(nt, Partition::row(2));

        assert!(Permutation::transposition(1, 7).cycle_type_sn(5).is_err());
    }

    #[test]
    fn inverse_and_compose() {
        let g = Permutation::from_cycles(&[&[1, -2, 3], &[0, 5]]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        let h = Permutation::transposition(1, 2);
        // (g∘h)(1) = g(2)
        assert_eq!(g.compose(&h).apply(1), g.apply(2));
        assert_eq!(g.sign(), -1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_pairs([(1, 2), (2, 2)]).is_err());
        assert!(Permutation::from_pairs([(1, 2)]).is_err());
        assert!(Permutation::from_cycles(&[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn group_membership() {
        let s = Permutation::transposition(1, 2);
        assert!(s.in_ge() && s.in_gd() && !s.in_k());
        let k = Permutation::from_cycles(&[&[1, 2], &[-1, -2]]).unwrap();
        assert!(k.in_k() && k.in_gd());
        let flip = Permutation::transposition(1, -1);
        assert!(flip.in_k() && flip.in_ge() && !flip.in_gd());
        let odd = Permutation::transposition(0, 3);
        assert!(!odd.in_ge());
    }

    #[test]
    fn arrangements_and_unrank_agree() {
        let all = all_arrangements(4);
        assert_eq!(all.len(), 24);
        let mut buf = Vec::new();
        for (i, a) in all.iter().enumerate() {
            unrank(i, 4, &mut buf);
            assert_eq!(&buf, a);
        }
        let sign_sum: i32 = all.iter().map(|a| arrangement_sign(a)).sum();
        assert_eq!(sign_sum, 0);
        let cycles: usize = all.iter().map(|a| arrangement_cycles(a)).sum();
        // total number of cycles over S(4) is 4! * H_4 = 50
        assert_eq!(cycles, 50);
    }
}
