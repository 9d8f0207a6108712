//! Seeded samplers for the randomized checks shared by the test suites and
//! the CLI `selftest`. All generators take an explicit RNG so runs are
//! reproducible from a single `u64` seed.

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{MixtureSpec, PairKind, ReprLabel};
use crate::diagram::WiringDiagram;
use crate::distribution::YoungDistribution;
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::rational::{int, ratio, Rational};
use crate::thoma::{ThomaMeasure, ThomaParams};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in `(0, 1]` with denominator at most `max_den`.
pub fn unit_rational(rng: &mut impl Rng, max_den: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    ratio(rng.gen_range(1..=q), q)
}

/// Thoma parameters with at most `max_each` entries per sequence and small
/// denominators; `γ` takes whatever mass is left.
pub fn params(rng: &mut impl Rng, max_each: usize) -> ThomaParams {
    loop {
        let mut budget = Rational::one();
        let mut draw = |rng: &mut _| -> Vec<Rational> {
            let k = Rng::gen_range(rng, 0..=max_each);
            let mut out = Vec::new();
            for _ in 0..k {
                let x = unit_rational(rng, 6) * &budget;
                if x.is_positive() && x < budget {
                    budget -= &x;
                    out.push(x);
                }
            }
            out
        };
        let alpha = draw(rng);
        let beta = draw(rng);
        if let Ok(p) = ThomaParams::new(alpha, beta) {
            return p;
        }
    }
}

/// `m(0) = m(1) = 1` followed by arbitrary small rationals.
pub fn mseq(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    let mut m = vec![int(1), int(1)];
    while m.len() < len {
        let q = rng.gen_range(1..=7);
        m.push(ratio(rng.gen_range(-9..=9), q));
    }
    m.truncate(len);
    m
}

/// A uniformly random bijection of `±1..±n`.
pub fn signed_permutation(rng: &mut impl Rng, n: u32) -> Permutation {
    let pts: Vec<i64> = (-(n as i64)..=n as i64).filter(|&i| i != 0).collect();
    let mut images = pts.clone();
    images.shuffle(rng);
    Permutation::from_images(&pts, &images).expect("shuffle is a bijection")
}

/// A product of `len` random generators of the window.
pub fn diagram(rng: &mut impl Rng, window: u32, odd: bool, len: usize) -> WiringDiagram {
    let id = WiringDiagram::identity(window, odd).expect("window ≥ 1");
    let indices = id.indices();
    let mut acc = id;
    for _ in 0..len {
        let g = match rng.gen_range(0..4) {
            0 => {
                let i = *indices.choose(rng).unwrap();
                let j = *indices.choose(rng).unwrap();
                let t = if i == j {
                    Permutation::identity()
                } else {
                    Permutation::transposition(i, j)
                };
                WiringDiagram::perm(&t, window, odd)
            }
            1 => WiringDiagram::a(*indices.choose(rng).unwrap(), window, odd),
            2 => WiringDiagram::c(int(rng.gen_range(0..=4)), window, odd),
            _ => WiringDiagram::p(rng.gen_range(0..window), window, odd),
        }
        .expect("generator in window");
        acc = acc.compose(&g).expect("same window");
    }
    acc
}

fn small_shape(rng: &mut impl Rng, max: u32) -> Partition {
    let n = rng.gen_range(0..=max);
    let all = Partition::all(n);
    all.choose(rng).cloned().unwrap_or_default()
}

/// A label with consistent sizes whose shapes sit at atoms of the measure
/// or at 0 (and, with probability `stray`, at a point off the support).
pub fn label(rng: &mut impl Rng, pair: PairKind, stray: f64) -> ReprLabel {
    let measure = params(rng, 2).to_measure();
    let mut points: Vec<Rational> = measure.support().cloned().collect();
    points.push(Rational::zero());
    let plant = |rng: &mut _| {
        let mut d = YoungDistribution::new();
        for _ in 0..Rng::gen_range(rng, 0..=2) {
            let x = if Rng::gen_bool(rng, stray) {
                ratio(Rng::gen_range(rng, -7..=7), 8)
            } else {
                points.choose(rng).unwrap().clone()
            };
            d.plant(x, small_shape(rng, 3)).expect("point in range");
        }
        d
    };
    let mut lambda = plant(rng);
    let one = Partition::row(1);
    match pair {
        PairKind::D => {
            let mut mu = plant(rng);
            let (a, b) = (lambda.size(), mu.size());
            let pad = |d: &mut YoungDistribution, k: u32| {
                if k > 0 {
                    d.plant(int(0), Partition::column(k)).unwrap();
                }
            };
            pad(&mut lambda, b.saturating_sub(a));
            pad(&mut mu, a.saturating_sub(b));
            ReprLabel {
                pair,
                depth: lambda.size(),
                measure,
                lambda,
                mu: Some(mu),
            }
        }
        PairKind::E | PairKind::O => {
            let want_odd = pair == PairKind::O;
            if (lambda.size() % 2 == 1) != want_odd {
                lambda.plant(int(0), one).unwrap();
            }
            ReprLabel {
                pair,
                depth: lambda.size() / 2,
                measure,
                lambda,
                mu: None,
            }
        }
    }
}

/// A mixture of `components` pair-E labels with random weights summing to 1.
pub fn mixture_spec(rng: &mut impl Rng, components: usize) -> MixtureSpec {
    let mut weights: Vec<Rational> = (0..components)
        .map(|_| ratio(rng.gen_range(1..=6), 1))
        .collect();
    let total: Rational = weights.iter().sum();
    for w in &mut weights {
        *w /= &total;
    }
    MixtureSpec::new(
        weights
            .into_iter()
            .map(|w| (w, label(rng, PairKind::E, 0.0))),
    )
}

/// `(x, ν, m)` for the single-atom falsifier: `x ≠ 0` of either sign,
/// `ν > 0` with `ν|x| ≤ 1`, and `1 ≤ m ≤ max_m`.
pub fn falsifier_instance(rng: &mut impl Rng, max_m: u32) -> (Rational, Rational, u32) {
    loop {
        let mut x = unit_rational(rng, 6);
        if rng.gen_bool(0.5) {
            x = -x;
        }
        let nu = ratio(rng.gen_range(1..=12), rng.gen_range(1..=4));
        if &nu * x.abs() <= Rational::one() {
            return (x, nu, rng.gen_range(1..=max_m));
        }
    }
}

/// A measure built from random parameters.
pub fn measure(rng: &mut impl Rng) -> ThomaMeasure {
    params(rng, 3).to_measure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    #[test]
    fn seeded_runs_repeat() {
        let a = params(&mut rng(7), 3);
        let b = params(&mut rng(7), 3);
        assert_eq!(a, b);
        assert_eq!(diagram(&mut rng(3), 3, false, 8), diagram(&mut rng(3), 3, false, 8));
    }

    #[test]
    fn labels_have_consistent_sizes() {
        let mut r = rng(11);
        for pair in [PairKind::D, PairKind::E, PairKind::O] {
            for _ in 0..50 {
                let l = label(&mut r, pair, 0.0);
                let v = classify(&l).unwrap();
                if let crate::classify::Verdict::Rejected { condition, .. } = v {
                    assert!(!matches!(
                        condition,
                        crate::classify::Condition::Size | crate::classify::Condition::Support
                    ));
                }
            }
        }
    }
}
