use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::classify::{PairKind, ReprLabel};
use crate::distribution::YoungDistribution;
use crate::rational::{self, pow, Rational};
use crate::thoma::{h_from_moments, PowerSeries, ThomaMeasure};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixtureComponent {
    #[serde(with = "crate::rational::serde_str")]
    pub weight: Rational,
    pub label: ReprLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixtureSpec {
    pub components: Vec<MixtureComponent>,
}

impl MixtureSpec {
    pub fn new(components: impl IntoIterator<Item = (Rational, ReprLabel)>) -> Self {
        MixtureSpec {
            components: components
                .into_iter()
                .map(|(weight, label)| MixtureComponent { weight, label })
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::InvalidMixture("no components".into()));
        }
        if let Some(c) = self.components.iter().find(|c| !c.weight.is_positive()) {
            return Err(Error::InvalidMixture(format!(
                "weight {} is not positive",
                rational::format(&c.weight)
            )));
        }
        let total: Rational = self.components.iter().map(|c| &c.weight).sum();
        if !total.is_one() {
            return Err(Error::InvalidMixture(format!(
                "weights sum to {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(())
    }

    /// Resulting pair tag: D with D, E with E, and E with a single O.
    fn pair(&self) -> Result<PairKind> {
        let count = |k| self.components.iter().filter(|c| c.label.pair == k).count();
        let (d, o) = (count(PairKind::D), count(PairKind::O));
        let n = self.components.len();
        match () {
            _ if d == n => Ok(PairKind::D),
            _ if d > 0 => Err(Error::InvalidMixture(
                "pair D mixes only with pair D".into(),
            )),
            _ if o > 1 => Err(Error::InvalidMixture(
                "at most one pair-O component may be mixed".into(),
            )),
            _ if o == 1 => Ok(PairKind::O),
            _ => Ok(PairKind::E),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixtureOutcome {
    pub label: ReprLabel,
    pub irreducible: bool,
}

/// Superposes the rescaled measures (atom `y ↦ p·y`, mass `m ↦ p·m`) and
/// distributions of the components; depths add.
pub fn mixture(spec: &MixtureSpec) -> Result<MixtureOutcome> {
    spec.validate()?;
    let pair = spec.pair()?;
    let measure = ThomaMeasure::superpose(
        spec.components
            .iter()
            .map(|c| c.label.measure.scaled_component(&c.weight)),
    )?;
    let mut lambdas = Vec::new();
    let mut mus = Vec::new();
    for c in &spec.components {
        lambdas.push(c.label.lambda.scaled(&c.weight)?);
        if let Some(m) = &c.label.mu {
            mus.push(m.scaled(&c.weight)?);
        }
    }
    let disjoint = |ds: &[YoungDistribution]| {
        ds.iter()
            .enumerate()
            .all(|(i, a)| ds[i + 1..].iter().all(|b| a.supports_disjoint(b)))
    };
    let irreducible = disjoint(&lambdas) && disjoint(&mus);
    let union = |ds: Vec<YoungDistribution>| {
        ds.into_iter()
            .fold(YoungDistribution::new(), |acc, d| acc.union(&d))
    };
    let label = ReprLabel {
        pair,
        depth: spec.components.iter().map(|c| c.label.depth).sum(),
        measure,
        lambda: union(lambdas),
        mu: (pair == PairKind::D).then(|| union(mus)),
    };
    Ok(MixtureOutcome { label, irreducible })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixtureCheck {
    pub order: usize,
    /// `c_k(mix) = Σ p_i^k c_k^{(i)}` for `k ≤ order`.
    pub moments: bool,
    /// `H_mix(t) = ∏ H_i(p_i t)` to `order`.
    pub hseries: bool,
    #[serde(with = "crate::rational::serde_vec")]
    pub mixed_moments: Vec<Rational>,
}

impl MixtureCheck {
    pub fn passed(&self) -> bool {
        self.moments && self.hseries
    }
}

/// Checks the moment rule and the H-series product rule for a mixture.
pub fn mixture_moment_check(spec: &MixtureSpec, order: usize) -> Result<MixtureCheck> {
    let mixed = mixture(spec)?.label.measure;
    let mixed_moments = mixed.moments(order);
    let expected: Vec<Rational> = (1..=order as u32)
        .map(|k| {
            spec.components
                .iter()
                .map(|c| pow(&c.weight, k) * c.label.measure.moment(k).expect("k ≥ 1"))
                .sum()
        })
        .collect();
    let h_mix = h_from_moments(&mixed_moments, order)?;
    let mut product = PowerSeries::one(order);
    for c in &spec.components {
        let h = h_from_moments(&c.label.measure.moments(order), order)?;
        product = &product * &h.scale_arg(&c.weight);
    }
    Ok(MixtureCheck {
        order,
        moments: mixed_moments == expected,
        hseries: h_mix == product,
        mixed_moments,
    })
}
