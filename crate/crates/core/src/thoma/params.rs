use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::rational::{self, pow, Rational};
use crate::thoma::ThomaMeasure;
use crate::{Error, Result};

/// `(α, β, γ)`: weakly decreasing positive `α`, `β` and the deficit
/// `γ = 1 - Σα - Σβ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThomaParams {
    alpha: Vec<Rational>,
    beta: Vec<Rational>,
    gamma: Rational,
}

fn sorted_desc(mut v: Vec<Rational>, name: &str) -> Result<Vec<Rational>> {
    if let Some(bad) = v.iter().find(|a| !a.is_positive()) {
        return Err(Error::InvalidParams(format!(
            "{name} entries must be positive, got {}",
            rational::format(bad)
        )));
    }
    v.sort_by(|a, b| b.cmp(a));
    Ok(v)
}

impl ThomaParams {
    /// `γ` is the deficit `1 - Σα - Σβ`, which must be nonnegative.
    pub fn new(alpha: Vec<Rational>, beta: Vec<Rational>) -> Result<Self> {
        let alpha = sorted_desc(alpha, "alpha")?;
        let beta = sorted_desc(beta, "beta")?;
        let total: Rational = alpha.iter().chain(beta.iter()).sum();
        let gamma = Rational::one() - total;
        if gamma.is_negative() {
            return Err(Error::InvalidParams("Σα + Σβ exceeds 1".into()));
        }
        Ok(ThomaParams { alpha, beta, gamma })
    }

    /// All three components given; they must sum to exactly 1.
    pub fn with_gamma(alpha: Vec<Rational>, beta: Vec<Rational>, gamma: Rational) -> Result<Self> {
        let p = Self::new(alpha, beta)?;
        if p.gamma != gamma {
            return Err(Error::InvalidParams(format!(
                "Σα + Σβ + γ must be 1 (γ should be {})",
                rational::format(&p.gamma)
            )));
        }
        Ok(p)
    }

    /// `α = (1)`: the trivial character.
    pub fn trivial() -> Self {
        Self::new(vec![Rational::one()], vec![]).unwrap()
    }

    /// `β = (1)`: the sign character.
    pub fn sign() -> Self {
        Self::new(vec![], vec![Rational::one()]).unwrap()
    }

    /// `γ = 1`: the regular representation.
    pub fn regular() -> Self {
        Self::new(vec![], vec![]).unwrap()
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    /// Number of nonzero parameters.
    pub fn count(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }

    /// Value on a single `k`-cycle: `Σα^k + (-1)^{k-1}Σβ^k` for `k ≥ 2`;
    /// `c_1 = 1`.
    pub fn cycle_moment(&self, k: u32) -> Rational {
        if k <= 1 {
            return Rational::one();
        }
        let a: Rational = self.alpha.iter().map(|x| pow(x, k)).sum();
        let b: Rational = self.beta.iter().map(|x| pow(x, k)).sum();
        if k % 2 == 1 {
            a + b
        } else {
            a - b
        }
    }

    /// The Thoma character on a permutation whose nontrivial cycle lengths
    /// are `cycles`. Parts below 2 are rejected.
    pub fn char_value(&self, cycles: &Partition) -> Result<Rational> {
        if let Some(&k) = cycles.parts().iter().find(|&&k| k < 2) {
            return Err(Error::OutOfRange(format!(
                "cycle length {k} is not a nontrivial cycle"
            )));
        }
        Ok(cycles
            .parts()
            .iter()
            .map(|&k| self.cycle_moment(k))
            .product())
    }

    /// Atoms `α_i ↦ α_i`, `-β_j ↦ β_j` (repeats aggregate), `γ` at zero.
    pub fn to_measure(&self) -> ThomaMeasure {
        let atoms = self
            .alpha
            .iter()
            .map(|a| (a.clone(), a.clone()))
            .chain(self.beta.iter().map(|b| (-b.clone(), b.clone())));
        ThomaMeasure::new(atoms, self.gamma.clone()).expect("parameters sum to one")
    }

    pub fn is_regular(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty() && !self.gamma.is_zero()
    }
}

#[derive(Serialize, Deserialize)]
struct WireParams {
    #[serde(default, with = "rational::serde_vec")]
    alpha: Vec<Rational>,
    #[serde(default, with = "rational::serde_vec")]
    beta: Vec<Rational>,
    #[serde(default, with = "rational::serde_opt", skip_serializing_if = "Option::is_none")]
    gamma: Option<Rational>,
}

impl Serialize for ThomaParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireParams {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            gamma: Some(self.gamma.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThomaParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireParams::deserialize(d)?;
        match w.gamma {
            Some(g) => ThomaParams::with_gamma(w.alpha, w.beta, g),
            None => ThomaParams::new(w.alpha, w.beta),
        }
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn char_value_examples() {
        let two = Partition::row(2);
        assert_eq!(ThomaParams::regular().char_value(&two).unwrap(), int(0));
        for c in Partition::all(6) {
            let c = c.nontrivial();
            assert_eq!(ThomaParams::trivial().char_value(&c).unwrap(), int(1));
        }
        let half = ThomaParams::new(vec![ratio(1, 2), ratio(1, 2)], vec![]).unwrap();
        assert_eq!(half.char_value(&Partition::row(3)).unwrap(), ratio(1, 4));
        assert_eq!(half.char_value(&Partition::empty()).unwrap(), int(1));
        assert!(half.char_value(&Partition::column(2)).is_err());
    }

    #[test]
    fn sign_character_values() {
        let s = ThomaParams::sign();
        assert_eq!(s.cycle_moment(2), int(-1));
        assert_eq!(s.cycle_moment(3), int(1));
    }

    #[test]
    fn validation() {
        assert!(ThomaParams::new(vec![ratio(2, 3), ratio(1, 2)], vec![]).is_err());
        assert!(ThomaParams::new(vec![int(0)], vec![]).is_err());
        assert!(ThomaParams::with_gamma(vec![ratio(1, 2)], vec![], ratio(1, 3)).is_err());
        let p = ThomaParams::new(vec![ratio(1, 5), ratio(1, 2)], vec![ratio(1, 10)]).unwrap();
        assert_eq!(p.alpha(), &[ratio(1, 2), ratio(1, 5)]);
        assert_eq!(p.gamma(), &ratio(1, 5));
    }

    #[test]
    fn json_round_trip() {
        let p = ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 4)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"alpha":["1/2"],"beta":["1/4"],"gamma":"1/4"}"#);
        assert_eq!(serde_json::from_str::<ThomaParams>(&s).unwrap(), p);
        let q: ThomaParams = serde_json::from_str(r#"{"alpha":["1"]}"#).unwrap();
        assert_eq!(q, ThomaParams::trivial());
    }
}
