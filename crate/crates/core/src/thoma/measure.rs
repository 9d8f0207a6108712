use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::permutation::Permutation;
use crate::rational::{self, pow, Rational};
use crate::thoma::ThomaParams;
use crate::{Error, Result};

/// A discrete probability measure on `[-1, 1]`: finitely many nonzero atoms
/// plus a mass at zero.
///
/// Integrality of `ν(x) = μ(x)/|x|` is checked by [`ThomaMeasure::validity`],
/// not at construction, so invalid measures can be represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThomaMeasure {
    atoms: BTreeMap<Rational, Rational>,
    zero_mass: Rational,
}

/// Outcome of the Thoma-measure test: `ν(x) ∈ ℤ₊` at every atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureValidity {
    pub valid: bool,
    /// `(x, ν(x))` for every atom where `ν` is not a positive integer.
    pub offending: Vec<(Rational, Rational)>,
}

impl ThomaMeasure {
    /// Atoms at repeated points aggregate. Total mass must be exactly 1.
    pub fn new(
        atoms: impl IntoIterator<Item = (Rational, Rational)>,
        zero_mass: Rational,
    ) -> Result<Self> {
        let m = Self::new_unnormalized(atoms, zero_mass)?;
        let total = m.total_mass();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!(
                "total mass is {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(m)
    }

    /// Same checks as [`ThomaMeasure::new`] except the total mass.
    pub(crate) fn new_unnormalized(
        atoms: impl IntoIterator<Item = (Rational, Rational)>,
        zero_mass: Rational,
    ) -> Result<Self> {
        if zero_mass.is_negative() {
            return Err(Error::InvalidMeasure("negative mass at zero".into()));
        }
        let mut map: BTreeMap<Rational, Rational> = BTreeMap::new();
        let mut zero = zero_mass;
        for (x, m) in atoms {
            if x.abs() > Rational::one() {
                return Err(Error::InvalidMeasure(format!(
                    "atom {} outside [-1,1]",
                    rational::format(&x)
                )));
            }
            if !m.is_positive() {
                return Err(Error::InvalidMeasure(format!(
                    "atom {} has non-positive mass",
                    rational::format(&x)
                )));
            }
            if x.is_zero() {
                zero += m;
                continue;
            }
            *map.entry(x).or_insert_with(Rational::zero) += m;
        }
        Ok(ThomaMeasure {
            atoms: map,
            zero_mass: zero,
        })
    }

    /// All mass at zero (`γ = 1`).
    pub fn at_zero() -> Self {
        ThomaMeasure {
            atoms: BTreeMap::new(),
            zero_mass: Rational::one(),
        }
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.atoms.iter()
    }

    pub fn zero_mass(&self) -> &Rational {
        &self.zero_mass
    }

    pub fn mass(&self, x: &Rational) -> Rational {
        if x.is_zero() {
            return self.zero_mass.clone();
        }
        self.atoms.get(x).cloned().unwrap_or_default()
    }

    pub fn total_mass(&self) -> Rational {
        self.atoms.values().sum::<Rational>() + &self.zero_mass
    }

    /// Nonzero atoms.
    pub fn support(&self) -> impl Iterator<Item = &Rational> {
        self.atoms.keys()
    }

    pub fn in_support(&self, x: &Rational) -> bool {
        self.atoms.contains_key(x)
    }

    /// `ν(x) = μ(x)/|x|` at a nonzero atom.
    pub fn nu(&self, x: &Rational) -> Option<Rational> {
        self.atoms.get(x).map(|m| m / x.abs())
    }

    pub fn validity(&self) -> MeasureValidity {
        let offending: Vec<_> = self
            .atoms
            .iter()
            .map(|(x, m)| (x.clone(), m / x.abs()))
            .filter(|(_, nu)| !rational::is_positive_integer(nu))
            .collect();
        MeasureValidity {
            valid: offending.is_empty(),
            offending,
        }
    }

    pub fn is_thoma_measure(&self) -> bool {
        self.validity().valid
    }

    /// Expands each atom `x` into `ν(x)` copies of `|x|` in `α` (x > 0) or
    /// `β` (x < 0). Fails when some `ν` is not a positive integer.
    pub fn to_params(&self) -> Result<ThomaParams> {
        let v = self.validity();
        if let Some((x, nu)) = v.offending.first() {
            return Err(Error::InvalidMeasure(format!(
                "ν({}) = {} is not a positive integer",
                rational::format(x),
                rational::format(nu)
            )));
        }
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for (x, m) in &self.atoms {
            let nu = (m / x.abs()).to_integer();
            let copies: usize = (&nu).try_into().map_err(|_| {
                Error::Budget(format!("ν = {nu} too large to expand"))
            })?;
            let target = if x.is_positive() { &mut alpha } else { &mut beta };
            target.extend(std::iter::repeat_n(x.abs(), copies));
        }
        ThomaParams::with_gamma(alpha, beta, self.zero_mass.clone())
    }

    /// `c_k = ∫ t^{k-1} dμ`; the mass at zero contributes only to `c_1`.
    pub fn moment(&self, k: u32) -> Result<Rational> {
        if k < 1 {
            return Err(Error::OutOfRange("moments are indexed from 1".into()));
        }
        let atoms: Rational = self.atoms.iter().map(|(x, m)| pow(x, k - 1) * m).sum();
        Ok(if k == 1 { atoms + &self.zero_mass } else { atoms })
    }

    /// `c_1, …, c_n`.
    pub fn moments(&self, n: usize) -> Vec<Rational> {
        (1..=n as u32).map(|k| self.moment(k).unwrap()).collect()
    }

    /// `x ↦ p·x` with every mass multiplied by `p` (a sub-probability
    /// measure of total mass `p`).
    pub(crate) fn scaled_component(&self, p: &Rational) -> Self {
        ThomaMeasure {
            atoms: self.atoms.iter().map(|(x, m)| (x * p, m * p)).collect(),
            zero_mass: &self.zero_mass * p,
        }
    }

    /// Sum of (sub-)measures.
    pub(crate) fn superpose(parts: impl IntoIterator<Item = ThomaMeasure>) -> Result<Self> {
        let mut atoms = Vec::new();
        let mut zero = Rational::zero();
        for part in parts {
            zero += &part.zero_mass;
            atoms.extend(part.atoms);
        }
        Self::new(atoms, zero)
    }
}

#[derive(Serialize, Deserialize)]
struct WireAtom {
    #[serde(with = "rational::serde_str")]
    x: Rational,
    #[serde(with = "rational::serde_str")]
    mass: Rational,
}

#[derive(Serialize, Deserialize)]
struct WireMeasure {
    #[serde(default)]
    atoms: Vec<WireAtom>,
    #[serde(with = "rational::serde_str")]
    zero_mass: Rational,
}

impl Serialize for ThomaMeasure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireMeasure {
            atoms: self
                .atoms
                .iter()
                .map(|(x, m)| WireAtom {
                    x: x.clone(),
                    mass: m.clone(),
                })
                .collect(),
            zero_mass: self.zero_mass.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThomaMeasure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireMeasure::deserialize(d)?;
        ThomaMeasure::new(w.atoms.into_iter().map(|a| (a.x, a.mass)), w.zero_mass)
            .map_err(serde::de::Error::custom)
    }
}

/// A test function for [`generalized_moment`]: a polynomial, or a table of
/// values at finitely many points (zero elsewhere), which is how atom
/// indicators `δ_x` are represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TestFunction {
    /// Coefficients in ascending degree.
    Poly(Vec<Rational>),
    Table(BTreeMap<Rational, Rational>),
}

impl TestFunction {
    pub fn one() -> Self {
        TestFunction::Poly(vec![Rational::one()])
    }

    /// `f(t) = t`.
    pub fn identity() -> Self {
        TestFunction::Poly(vec![Rational::zero(), Rational::one()])
    }

    /// `δ_x`: 1 at `x`, 0 elsewhere.
    pub fn indicator(x: Rational) -> Self {
        TestFunction::Table([(x, Rational::one())].into_iter().collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        match self {
            TestFunction::Poly(c) => c
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, a| acc * t + a),
            TestFunction::Table(values) => values.get(t).cloned().unwrap_or_default(),
        }
    }

    fn is_one(&self) -> bool {
        matches!(self, TestFunction::Poly(c) if c.len() == 1 && c[0].is_one())
    }
}

/// `∏_{p ∈ ℕ/σ} ∫ t^{|p|-1} ∏_{j∈p} f_j(t) dμ` for `σ ∈ S(∞)` and test
/// functions indexed by positions in `ℕ = {1, 2, …}`; unlisted positions
/// carry the constant 1.
pub fn generalized_moment(
    mu: &ThomaMeasure,
    sigma: &Permutation,
    fs: &BTreeMap<u64, TestFunction>,
) -> Result<Rational> {
    if let Some(x) = sigma.support().find(|&x| x < 1) {
        return Err(Error::InvalidPermutation(format!(
            "{x} is not a positive integer; σ must lie in S(∞)"
        )));
    }
    if fs.keys().any(|&k| k < 1) {
        return Err(Error::OutOfRange("positions start at 1".into()));
    }
    let mut points: BTreeSet<i64> = sigma.support().collect();
    points.extend(
        fs.iter()
            .filter(|(_, f)| !f.is_one())
            .map(|(&k, _)| k as i64),
    );
    let one = TestFunction::one();
    let mut seen = BTreeSet::new();
    let mut acc = Rational::one();
    for &start in &points {
        if !seen.insert(start) {
            continue;
        }
        let mut orbit = vec![start];
        let mut x = sigma.apply(start);
        while x != start {
            seen.insert(x);
            orbit.push(x);
            x = sigma.apply(x);
        }
        let funcs: Vec<&TestFunction> = orbit
            .iter()
            .map(|j| fs.get(&(*j as u64)).unwrap_or(&one))
            .collect();
        let size = orbit.len() as u32;
        let integrand = |t: &Rational| -> Rational {
            funcs.iter().map(|f| f.eval(t)).product::<Rational>() * pow(t, size - 1)
        };
        let mut integral: Rational = mu.atoms().map(|(x, m)| integrand(x) * m).sum();
        if !mu.zero_mass().is_zero() {
            integral += integrand(&Rational::zero()) * mu.zero_mass();
        }
        acc *= integral;
    }
    Ok(acc)
}
