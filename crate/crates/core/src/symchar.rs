//! Characters of the finite symmetric groups `S(n)`.
//!
//! Irreducible characters come from two independent routes: the
//! Murnaghan–Nakayama rule ([`mn_character`]) and the Frobenius determinant
//! in the permutation characters `η^μ` ([`frobenius_character`]).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::permutation::{all_arrangements, arrangement_sign};
use crate::rational::{from_bigint, Rational};
use crate::{Error, Exec, Result};

fn check_sizes(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(format!(
            "{a} has size {} but class {b} has size {}",
            a.size(),
            b.size()
        )));
    }
    Ok(())
}

/// `η^μ(ρ)`: the character induced from the trivial character of the Young
/// subgroup `S(μ_1) × S(μ_2) × …`, on the class `ρ`.
///
/// Counts the ways to distribute the cycles of `ρ` into blocks of sizes
/// `μ_i` (cycles are distinguishable, blocks are ordered).
pub fn eta_character(mu: &Partition, rho: &Partition) -> Result<BigInt> {
    check_sizes(mu, rho)?;
    Ok(eta_unchecked(mu.parts(), rho.parts()))
}

fn eta_unchecked(blocks: &[u32], cycles: &[u32]) -> BigInt {
    fn rec(
        i: usize,
        cycles: &[u32],
        caps: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
    ) -> BigInt {
        if i == cycles.len() {
            return if caps.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (i, caps.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for b in 0..caps.len() {
            if caps[b] >= cycles[i] {
                caps[b] -= cycles[i];
                total += rec(i + 1, cycles, caps, memo);
                caps[b] += cycles[i];
            }
        }
        memo.insert(key, total.clone());
        total
    }
    let mut caps = blocks.to_vec();
    rec(0, cycles, &mut caps, &mut HashMap::new())
}

/// Beta-set of a partition padded to `len` rows: `λ_i + (len - 1 - i)`.
fn beta_set(lambda: &Partition, len: usize) -> Vec<u32> {
    (0..len)
        .map(|i| lambda.part(i) + (len - 1 - i) as u32)
        .collect()
}

fn from_beta_set(beta: &[u32]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::from_unsorted(
        b.iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i) as u32)
            .collect(),
    )
}

/// Removable `k`-border strips of `λ`, as `(λ minus strip, (-1)^height)`.
pub fn border_strips(lambda: &Partition, k: u32) -> Vec<(Partition, i32)> {
    let beta = beta_set(lambda, lambda.len());
    strips_of_beta(&beta, k)
        .into_iter()
        .map(|(b, s)| (from_beta_set(&b), s))
        .collect()
}

fn strips_of_beta(beta: &[u32], k: u32) -> Vec<(Vec<u32>, i32)> {
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        out.push((next, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
///
/// Non-unit cycles are stripped largest first with a per-call memo on
/// (shape, cycles consumed); once only fixed points remain the value is
/// `dim_syt` of the remaining shape.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    check_sizes(lambda, rho)?;
    let cycles: Vec<u32> = rho.parts().iter().copied().filter(|&c| c >= 2).collect();
    let beta = beta_set(lambda, lambda.len());
    let mut memo = HashMap::new();
    Ok(mn_rec(&beta, &cycles, 0, &mut memo))
}

fn mn_rec(
    beta: &[u32],
    cycles: &[u32],
    i: usize,
    memo: &mut HashMap<(Vec<u32>, usize), BigInt>,
) -> BigInt {
    if i == cycles.len() {
        return from_beta_set(beta).dim_syt();
    }
    let key = (beta.to_vec(), i);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (next, sign) in strips_of_beta(beta, cycles[i]) {
        let v = mn_rec(&next, cycles, i + 1, memo);
        if sign > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ^λ(ρ)` from the Frobenius determinant
/// `Σ_{w∈S(r)} sgn(w) η^{(λ_i - i + w(i))_i}(ρ)`, dropping terms with a
/// negative index.
pub fn frobenius_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    check_sizes(lambda, rho)?;
    let r = lambda.len();
    let mut total = BigInt::zero();
    for w in all_arrangements(r) {
        let mut parts = Vec::with_capacity(r);
        let mut ok = true;
        for (i, &wi) in w.iter().enumerate() {
            let v = lambda.part(i) as i64 - i as i64 + wi as i64;
            if v < 0 {
                ok = false;
                break;
            }
            parts.push(v as u32);
        }
        if !ok {
            continue;
        }
        let blocks = Partition::from_unsorted(parts);
        let term = eta_unchecked(blocks.parts(), rho.parts());
        if arrangement_sign(&w) > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `χ^λ(k, 1^{n-k}) / dim λ`, from the removable `k`-strips and hook-length
/// dimensions.
pub fn normalized_cycle_char(lambda: &Partition, k: u32) -> Result<Rational> {
    let n = lambda.size();
    if k < 2 || k > n {
        return Err(Error::OutOfRange(format!("cycle length {k} not in 2..={n}")));
    }
    let mut num = BigInt::zero();
    for (rest, sign) in border_strips(lambda, k) {
        let d = rest.dim_syt();
        if sign > 0 {
            num += d;
        } else {
            num -= d;
        }
    }
    Ok(Rational::new(num, lambda.dim_syt()))
}

/// A class function on `S(n)`: one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn from_fn(n: u32, f: impl Fn(&Partition) -> Rational) -> Self {
        let values = Partition::all(n).into_iter().map(|rho| {
            let v = f(&rho);
            (rho, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn try_from_fn(n: u32, f: impl Fn(&Partition) -> Result<Rational>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for rho in Partition::all(n) {
            let v = f(&rho)?;
            values.insert(rho, v);
        }
        Ok(ClassFunction { n, values })
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        ClassFunction::from_fn(lambda.size(), |rho| {
            from_bigint(mn_character(lambda, rho).expect("same size"))
        })
    }

    /// The permutation character `η^μ`.
    pub fn eta(mu: &Partition) -> Self {
        ClassFunction::from_fn(mu.size(), |rho| {
            from_bigint(eta_unchecked(mu.parts(), rho.parts()))
        })
    }

    pub fn constant(n: u32, c: Rational) -> Self {
        ClassFunction::from_fn(n, |_| c.clone())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, rho: &Partition) -> Option<&Rational> {
        self.values.get(rho)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }
}

/// `⟨f, g⟩ = Σ_{ρ⊢n} f(ρ) g(ρ) / z_ρ`. Values are real, so no conjugation.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(format!(
            "class functions on S({}) and S({})",
            f.n, g.n
        )));
    }
    let mut acc = Rational::zero();
    for (rho, fv) in &f.values {
        let gv = &g.values[rho];
        acc += fv * gv / from_bigint(rho.z());
    }
    Ok(acc)
}

/// Character table of `S(n)`: `values[s][c] = χ^{shapes[s]}(classes[c])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: u32,
    pub shapes: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_exec(n, Exec::default())
    }

    /// Rows are computed independently, optionally in parallel.
    pub fn with_exec(n: u32, exec: Exec) -> Result<Self> {
        let shapes = Partition::all(n);
        let classes = shapes.clone();
        let rows: Vec<Result<Vec<i64>>> = exec.map(&shapes, |lambda| {
            classes
                .iter()
                .map(|rho| {
                    let v = mn_character(lambda, rho)?;
                    i64::try_from(&v).map_err(|_| {
                        Error::Budget(format!("character value {v} exceeds 64 bits"))
                    })
                })
                .collect()
        });
        let values = rows.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            n,
            shapes,
            classes,
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::{all_arrangements, arrangement_cycles};
    use crate::rational::{int, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// A permutation of `0..n` with cycle type `rho`.
    fn representative(rho: &Partition) -> Vec<usize> {
        let n = rho.size() as usize;
        let mut perm = vec![0; n];
        let mut start = 0;
        for &len in rho.parts() {
            let len = len as usize;
            for j in 0..len {
                perm[start + j] = start + (j + 1) % len;
            }
            start += len;
        }
        perm
    }

    /// Number of cosets of the Young subgroup fixed by a representative of
    /// `rho`: block assignments `w` with `w ∘ g = w` and block sizes `mu`.
    fn eta_brute(mu: &Partition, rho: &Partition) -> i64 {
        let n = rho.size() as usize;
        let g = representative(rho);
        let blocks = mu.len();
        let mut count = 0;
        let mut assign = vec![0usize; n];
        fn rec(
            i: usize,
            assign: &mut Vec<usize>,
            blocks: usize,
            mu: &Partition,
            g: &[usize],
            count: &mut i64,
        ) {
            let n = assign.len();
            if i == n {
                let sizes_ok = (0..blocks)
                    .all(|b| assign.iter().filter(|&&a| a == b).count() as u32 == mu.part(b));
                let fixed = (0..n).all(|x| assign[g[x]] == assign[x]);
                if sizes_ok && fixed {
                    *count += 1;
                }
                return;
            }
            for b in 0..blocks {
                assign[i] = b;
                rec(i + 1, assign, blocks, mu, g, count);
            }
        }
        rec(0, &mut assign, blocks, mu, &g, &mut count);
        count
    }

    #[test]
    fn eta_examples() {
        for rho in Partition::all(4) {
            assert_eq!(eta_character(&p(&[4]), &rho).unwrap(), BigInt::from(1));
        }
        assert_eq!(eta_character(&p(&[1, 1]), &p(&[1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(eta_character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(0));
        let vals: Vec<BigInt> = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]
            .iter()
            .map(|rho| eta_character(&p(&[2, 1]), rho).unwrap())
            .collect();
        assert_eq!(vals, vec![3.into(), 1.into(), 0.into()]);
        assert!(eta_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn eta_matches_coset_enumeration() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                for rho in Partition::all(n) {
                    assert_eq!(
                        eta_character(&mu, &rho).unwrap(),
                        BigInt::from(eta_brute(&mu, &rho)),
                        "eta^{mu}({rho})"
                    );
                }
            }
        }
    }

    #[test]
    fn mn_examples() {
        let vals: Vec<BigInt> = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]
            .iter()
            .map(|rho| mn_character(&p(&[2, 1]), rho).unwrap())
            .collect();
        assert_eq!(vals, vec![2.into(), 0.into(), (-1).into()]);
        for rho in Partition::all(5) {
            assert_eq!(mn_character(&p(&[5]), &rho).unwrap(), BigInt::one());
            let sign = if (5 - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&Partition::column(5), &rho).unwrap(), BigInt::from(sign));
        }
    }

    #[test]
    fn frobenius_examples() {
        for rho in Partition::all(2) {
            assert_eq!(
                frobenius_character(&p(&[2]), &rho).unwrap(),
                eta_character(&p(&[2]), &rho).unwrap()
            );
        }
        assert_eq!(frobenius_character(&p(&[1, 1]), &p(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(frobenius_character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn mn_equals_frobenius_up_to_six() {
        for n in 0..=6 {
            for lambda in Partition::all(n) {
                for rho in Partition::all(n) {
                    assert_eq!(
                        mn_character(&lambda, &rho).unwrap(),
                        frobenius_character(&lambda, &rho).unwrap(),
                        "chi^{lambda}({rho})"
                    );
                }
            }
        }
    }

    #[test]
    fn mn_on_identity_is_dimension() {
        for n in 0..=12 {
            for lambda in Partition::all(n) {
                assert_eq!(
                    mn_character(&lambda, &Partition::column(n)).unwrap(),
                    lambda.dim_syt()
                );
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let one = ClassFunction::constant(4, int(1));
        assert_eq!(inner_product(&one, &one).unwrap(), int(1));
        let eta = ClassFunction::eta(&p(&[2, 1]));
        let triv = ClassFunction::irreducible(&p(&[3]));
        assert_eq!(inner_product(&eta, &triv).unwrap(), int(1));
        let other = ClassFunction::constant(3, int(1));
        assert!(inner_product(&one, &other).is_err());
    }

    /// Average over the whole group, bypassing the class-sum form.
    #[test]
    fn inner_product_matches_group_average() {
        let n = 4;
        let f = ClassFunction::irreducible(&p(&[3, 1]));
        let g = ClassFunction::eta(&p(&[2, 2]));
        let mut sum = Rational::zero();
        let all = all_arrangements(n);
        for perm in &all {
            let mut seen = vec![false; n];
            let mut lens = Vec::new();
            for s in 0..n {
                if !seen[s] {
                    let mut len = 0;
                    let mut x = s;
                    while !seen[x] {
                        seen[x] = true;
                        x = perm[x];
                        len += 1;
                    }
                    lens.push(len);
                }
            }
            assert_eq!(lens.len(), arrangement_cycles(perm));
            let rho = Partition::from_unsorted(lens);
            sum += f.value(&rho).unwrap() * g.value(&rho).unwrap();
        }
        let avg = sum / int(all.len() as i64);
        assert_eq!(inner_product(&f, &g).unwrap(), avg);
    }

    #[test]
    fn normalized_cycle_examples() {
        assert_eq!(normalized_cycle_char(&p(&[6]), 3).unwrap(), int(1));
        assert_eq!(normalized_cycle_char(&Partition::column(6), 3).unwrap(), int(1));
        assert_eq!(normalized_cycle_char(&Partition::column(6), 2).unwrap(), int(-1));
        assert_eq!(normalized_cycle_char(&p(&[2, 1]), 2).unwrap(), int(0));
        assert!(normalized_cycle_char(&p(&[2, 1]), 4).is_err());
        assert!(normalized_cycle_char(&p(&[2, 1]), 1).is_err());
        // (m,m): content sum m^2 - 2m over binom(2m, 2)
        assert_eq!(normalized_cycle_char(&p(&[5, 5]), 2).unwrap(), ratio(3, 9));
    }

    #[test]
    fn normalized_cycle_matches_mn() {
        for n in 2..=7 {
            for lambda in Partition::all(n) {
                for k in 2..=n {
                    let rho = Partition::row(k).pad_to(n).unwrap();
                    let expect = Rational::new(mn_character(&lambda, &rho).unwrap(), lambda.dim_syt());
                    assert_eq!(normalized_cycle_char(&lambda, k).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn table_strategies_agree() {
        let a = CharacterTable::with_exec(6, Exec::Sequential).unwrap();
        let b = CharacterTable::with_exec(6, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.shapes.len(), 11);
    }
}
