//! Young distributions: finitely many Young diagrams planted at rational
//! points of `[-1, 1]`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::rational::{self, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YoungDistribution {
    entries: BTreeMap<Rational, Partition>,
}

fn check_point(x: &Rational) -> Result<()> {
    if x.abs() > Rational::one() {
        return Err(Error::OutOfRange(format!(
            "point {} outside [-1,1]",
            rational::format(x)
        )));
    }
    Ok(())
}

impl YoungDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(point, shape)` pairs. Empty shapes are dropped and
    /// shapes at a repeated point are merged by part union.
    pub fn from_entries(entries: impl IntoIterator<Item = (Rational, Partition)>) -> Result<Self> {
        let mut d = Self::new();
        for (x, shape) in entries {
            d.plant(x, shape)?;
        }
        Ok(d)
    }

    /// Adds `shape` at `x`, merging parts with whatever already grows there.
    pub fn plant(&mut self, x: Rational, shape: Partition) -> Result<()> {
        check_point(&x)?;
        if shape.is_empty() {
            return Ok(());
        }
        let merged = match self.entries.get(&x) {
            Some(existing) => existing.union(&shape),
            None => shape,
        };
        self.entries.insert(x, merged);
        Ok(())
    }

    /// Replaces the shape at `x` (removing the entry if `shape` is empty).
    pub fn set(&mut self, x: Rational, shape: Partition) -> Result<()> {
        check_point(&x)?;
        if shape.is_empty() {
            self.entries.remove(&x);
        } else {
            self.entries.insert(x, shape);
        }
        Ok(())
    }

    /// Shape at `x`; the empty partition off the support.
    pub fn at(&self, x: &Rational) -> Partition {
        self.entries.get(x).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, &Partition)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Rational> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|Λ| = Σ_x |Λ(x)|`.
    pub fn size(&self) -> u32 {
        self.entries.values().map(Partition::size).sum()
    }

    /// `ρ(Λ)`: the sizes `|Λ(x)|` sorted into a partition of `|Λ|`.
    pub fn rho(&self) -> Partition {
        Partition::from_unsorted(self.entries.values().map(Partition::size).collect())
    }

    /// Moves the shape at `y` to `p·y`, for `0 < p ≤ 1`. Colliding points
    /// merge by part union.
    pub fn scaled(&self, p: &Rational) -> Result<Self> {
        if !p.is_positive() || p > &Rational::one() {
            return Err(Error::OutOfRange(format!(
                "scale factor {} not in (0,1]",
                rational::format(p)
            )));
        }
        Self::from_entries(self.entries.iter().map(|(x, s)| (x * p, s.clone())))
    }

    /// Pointwise union of part multisets.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, s) in &other.entries {
            out.plant(x.clone(), s.clone())
                .expect("points of a valid distribution are in range");
        }
        out
    }

    pub fn supports_disjoint(&self, other: &Self) -> bool {
        self.entries.keys().all(|x| !other.entries.contains_key(x))
    }

    /// Shape at zero, if any.
    pub fn at_zero(&self) -> Partition {
        self.at(&Rational::zero())
    }
}

#[derive(Serialize, Deserialize)]
struct WireEntry {
    #[serde(with = "rational::serde_str")]
    x: Rational,
    shape: Partition,
}

impl Serialize for YoungDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireEntry> = self
            .entries
            .iter()
            .map(|(x, shape)| WireEntry {
                x: x.clone(),
                shape: shape.clone(),
            })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for YoungDistribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireEntry>::deserialize(d)?;
        YoungDistribution::from_entries(wire.into_iter().map(|e| (e.x, e.shape)))
            .map_err(serde::de::Error::custom)
    }
}
