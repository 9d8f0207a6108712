use num_traits::{One, Zero};

use crate::linalg::det;
use crate::partition::{Direction, Partition};
use crate::rational::{from_bigint, int, Rational};
use crate::symchar::ClassFunction;
use crate::thoma::{PowerSeries, ThomaParams};
use crate::{Error, Result};

/// `H(t) = e^{γt} ∏(1 + β_j t) / ∏(1 - α_i t)` to order `order`.
pub fn h_from_params(p: &ThomaParams, order: usize) -> PowerSeries {
    let mut h = PowerSeries::exp_linear(p.gamma(), order);
    for a in p.alpha() {
        h = &h * &PowerSeries::geometric(a, order);
    }
    for b in p.beta() {
        h = &h * &PowerSeries::linear(b, order);
    }
    h
}

/// `m(0), …, m(order)`: the coefficients of [`h_from_params`].
pub fn mseq_from_params(p: &ThomaParams, order: usize) -> Vec<Rational> {
    h_from_params(p, order).into_coeffs()
}

/// `H = exp(Σ c_i t^i / i)` from `c = (c_1, c_2, …)`, via
/// `k m(k) = Σ_{j=1}^{k} c_j m(k-j)`.
pub fn h_from_moments(c: &[Rational], order: usize) -> Result<PowerSeries> {
    if c.len() < order {
        return Err(Error::InsufficientCoefficients {
            needed: order,
            have: c.len(),
        });
    }
    let mut m: Vec<Rational> = Vec::with_capacity(order + 1);
    m.push(Rational::one());
    for k in 1..=order {
        let s: Rational = (1..=k).map(|j| &c[j - 1] * &m[k - j]).sum();
        m.push(s / int(k as i64));
    }
    PowerSeries::new(m)
}

/// `(c_1, …, c_N)` from `c_1 + c_2 t + … = H'/H`, where `N` is the order
/// of `H`.
pub fn c_from_h(h: &PowerSeries) -> Result<Vec<Rational>> {
    let inv = h.reciprocal()?;
    if h.order() == 0 {
        return Ok(Vec::new());
    }
    Ok((&h.derivative() * &inv.truncate(h.order() - 1)).into_coeffs())
}

/// `H(-t)^{-1}`, which exchanges the roles of `α` and `β`.
pub fn sign_transform(h: &PowerSeries) -> Result<PowerSeries> {
    h.scale_arg(&int(-1)).reciprocal()
}

fn m_at(mseq: &[Rational], k: i64) -> Rational {
    if k < 0 {
        Rational::zero()
    } else {
        mseq[k as usize].clone()
    }
}

/// `m(λ) = det[m(λ_i - i + j)]`, with `m(k) = 0` for `k < 0`.
pub fn m_lambda(mseq: &[Rational], lambda: &Partition) -> Result<Rational> {
    let l = lambda.len();
    let needed = lambda.part(0) as usize + l;
    if l > 0 && mseq.len() < needed {
        return Err(Error::InsufficientCoefficients {
            needed,
            have: mseq.len(),
        });
    }
    let matrix = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| m_at(mseq, lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(det(matrix))
}

/// Outcome of [`coherence_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub checked: usize,
    /// `(λ, m(λ), Σ_{Λ↘λ} m(Λ))` for each failing `λ`.
    pub failures: Vec<(Partition, Rational, Rational)>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `m(λ) = Σ_{Λ↘λ} m(Λ)` for every `λ ⊢ n < nmax`, where `Λ` runs
/// over diagrams with one more box.
pub fn coherence_check(mseq: &[Rational], nmax: u32) -> Result<CoherenceReport> {
    if mseq.len() < 2 || !mseq[0].is_one() || !mseq[1].is_one() {
        return Err(Error::InvalidParams(
            "coherence needs m(0) = m(1) = 1".into(),
        ));
    }
    let mut report = CoherenceReport {
        checked: 0,
        failures: Vec::new(),
    };
    for n in 0..nmax {
        for lambda in Partition::all(n) {
            let lhs = m_lambda(mseq, &lambda)?;
            let mut rhs = Rational::zero();
            for big in lambda.covers(Direction::Up) {
                rhs += m_lambda(mseq, &big)?;
            }
            report.checked += 1;
            if lhs != rhs {
                report.failures.push((lambda, lhs, rhs));
            }
        }
    }
    Ok(report)
}

/// Outcome of [`multiplicativity_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub checked: usize,
    /// `(μ₁, μ₂, lhs, rhs)` for each pair of basis functions `η^{μ₁}`,
    /// `η^{μ₂}` where the product rule fails.
    pub failures: Vec<(Partition, Partition, Rational, Rational)>,
}

impl MultiplicativityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Largest `n₁ + n₂` accepted by [`multiplicativity_check`].
pub const MULTIPLICATIVITY_MAX: u32 = 8;

/// Tests `⟨φ|_{S(n₁)×S(n₂)}, f₁⊗f₂⟩ = ⟨φ|_{S(n₁)}, f₁⟩⟨φ|_{S(n₂)}, f₂⟩`
/// with `f₁`, `f₂` over the `η`-bases. `phi` receives nontrivial cycle
/// types (a class function on `S(∞)`).
pub fn multiplicativity_check<F>(phi: F, n1: u32, n2: u32) -> Result<MultiplicativityReport>
where
    F: Fn(&Partition) -> Result<Rational>,
{
    if n1 + n2 > MULTIPLICATIVITY_MAX {
        return Err(Error::Budget(format!(
            "n1 + n2 = {} exceeds {MULTIPLICATIVITY_MAX}",
            n1 + n2
        )));
    }
    let restrict = |n: u32| ClassFunction::try_from_fn(n, |rho| phi(&rho.nontrivial()));
    let phi1 = restrict(n1)?;
    let phi2 = restrict(n2)?;
    let classes1 = Partition::all(n1);
    let classes2 = Partition::all(n2);
    // φ on S(n₁)×S(n₂) at (ρ₁, ρ₂), weighted by 1/(z_{ρ₁} z_{ρ₂})
    let mut joint = Vec::new();
    for r1 in &classes1 {
        for r2 in &classes2 {
            let w = from_bigint(r1.z() * r2.z());
            joint.push((r1, r2, phi(&r1.union(r2).nontrivial())? / w));
        }
    }
    let mut report = MultiplicativityReport {
        checked: 0,
        failures: Vec::new(),
    };
    for mu1 in &classes1 {
        let f1 = ClassFunction::eta(mu1);
        let rhs1 = crate::symchar::inner_product(&phi1, &f1)?;
        for mu2 in &classes2 {
            let f2 = ClassFunction::eta(mu2);
            let rhs = &rhs1 * crate::symchar::inner_product(&phi2, &f2)?;
            let lhs: Rational = joint
                .iter()
                .map(|(r1, r2, v)| v * f1.value(r1).unwrap() * f2.value(r2).unwrap())
                .sum();
            report.checked += 1;
            if lhs != rhs {
                report.failures.push((mu1.clone(), mu2.clone(), lhs, rhs));
            }
        }
    }
    Ok(report)
}

/// [`multiplicativity_check`] for the Thoma character of `p`.
pub fn multiplicativity_check_params(
    p: &ThomaParams,
    n1: u32,
    n2: u32,
) -> Result<MultiplicativityReport> {
    multiplicativity_check(|cycles| p.char_value(cycles), n1, n2)
}
