use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::distribution::YoungDistribution;
use crate::partition::Partition;
use crate::rational::{self, binomial, factorial, int, is_even_positive_integer, Rational};
use crate::thoma::{MeasureValidity, ThomaMeasure};
use crate::{Error, Result};

/// Which Gelfand pair the representation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairKind {
    D,
    E,
    O,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::D => "D",
            PairKind::E => "E",
            PairKind::O => "O",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReprLabel {
    pub pair: PairKind,
    pub depth: u32,
    pub measure: ThomaMeasure,
    pub lambda: YoungDistribution,
    /// Second distribution, present exactly for pair `D`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<YoungDistribution>,
}

impl ReprLabel {
    fn check_shape(&self) -> Result<()> {
        match (self.pair, &self.mu) {
            (PairKind::D, None) => Err(Error::MalformedLabel("pair D needs a mu distribution".into())),
            (PairKind::E | PairKind::O, Some(_)) => Err(Error::MalformedLabel(format!(
                "pair {} takes no mu distribution",
                self.pair
            ))),
            _ => Ok(()),
        }
    }

    fn distributions(&self) -> impl Iterator<Item = &YoungDistribution> {
        std::iter::once(&self.lambda).chain(self.mu.as_ref())
    }
}

/// The condition a rejected label failed, in evaluation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    MeasureValidity,
    Parity,
    Support,
    Size,
    Inequality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Admissible,
    Rejected { condition: Condition, reason: String },
}

impl Verdict {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Verdict::Admissible)
    }

    fn reject(condition: Condition, reason: String) -> Self {
        Verdict::Rejected { condition, reason }
    }
}

/// Whether `ν(x) = mass(x)/|x|` is a positive integer at every atom.
pub fn is_thoma_measure(mu: &ThomaMeasure) -> MeasureValidity {
    mu.validity()
}

/// Evaluates measure validity, the parity condition on negative atoms
/// (pairs E, O), support, sizes and the pointwise inequalities, and reports
/// the first violation.
pub fn classify(label: &ReprLabel) -> Result<Verdict> {
    label.check_shape()?;
    let mu = &label.measure;
    let fmt = rational::format;

    let validity = mu.validity();
    if !validity.valid {
        let (x, nu) = &validity.offending[0];
        return Ok(Verdict::reject(
            Condition::MeasureValidity,
            format!("ν({}) = {} is not a positive integer", fmt(x), fmt(nu)),
        ));
    }

    if label.pair != PairKind::D {
        for x in mu.support().filter(|x| x.is_negative()) {
            let nu = mu.nu(x).expect("atom");
            if !is_even_positive_integer(&nu) {
                return Ok(Verdict::reject(
                    Condition::Parity,
                    format!("ν({}) = {} is not even", fmt(x), fmt(&nu)),
                ));
            }
        }
    }

    for (name, dist) in ["Λ", "M"].into_iter().zip(label.distributions()) {
        if let Some(x) = dist.support().find(|x| !x.is_zero() && !mu.in_support(x)) {
            return Ok(Verdict::reject(
                Condition::Support,
                format!("{name}({}) is nonempty but {} is not an atom", fmt(x), fmt(x)),
            ));
        }
    }

    let d = label.depth;
    let size = label.lambda.size();
    let size_ok = match label.pair {
        PairKind::D => size == d && label.mu.as_ref().map(|m| m.size()) == Some(d),
        PairKind::E => size == 2 * d,
        PairKind::O => size == 2 * d + 1,
    };
    if !size_ok {
        let expect = match label.pair {
            PairKind::D => format!("|Λ| = |M| = {d}"),
            PairKind::E => format!("|Λ| = {}", 2 * d),
            PairKind::O => format!("|Λ| = {}", 2 * d + 1),
        };
        let mut got = format!("|Λ| = {size}");
        if let Some(m) = &label.mu {
            got += &format!(", |M| = {}", m.size());
        }
        return Ok(Verdict::reject(
            Condition::Size,
            format!("depth {d} needs {expect}, got {got}"),
        ));
    }

    let mut points: Vec<&Rational> = label
        .distributions()
        .flat_map(|dist| dist.support())
        .filter(|x| !x.is_zero())
        .collect();
    points.sort();
    points.dedup();
    for x in points {
        let nu = mu.nu(x).expect("support checked");
        let lam = label.lambda.at(x);
        let failure = match label.pair {
            PairKind::D => {
                let m = label.mu.as_ref().expect("checked").at(x);
                let (lhs, what) = if x.is_positive() {
                    (lam.len() + m.len(), "ℓ(Λ(x)) + ℓ(M(x))")
                } else {
                    (
                        (lam.part(0) + m.part(0)) as usize,
                        "ℓ(Λ′(x)) + ℓ(M′(x))",
                    )
                };
                (int(lhs as i64) > nu).then(|| format!("{what} = {lhs} > ν = {}", fmt(&nu)))
            }
            PairKind::E | PairKind::O => {
                if x.is_positive() {
                    let c = lam.conjugate();
                    let lhs = c.part(0) + c.part(1);
                    (int(lhs as i64) > nu)
                        .then(|| format!("Λ′(x)₁ + Λ′(x)₂ = {lhs} > ν = {}", fmt(&nu)))
                } else {
                    let lhs = lam.part(0);
                    (int(2 * lhs as i64) > nu)
                        .then(|| format!("Λ(x)₁ = {lhs} > ν/2 = {}", fmt(&(nu / int(2)))))
                }
            }
        };
        if let Some(msg) = failure {
            return Ok(Verdict::reject(
                Condition::Inequality,
                format!("at x = {}: {msg}", fmt(x)),
            ));
        }
    }
    Ok(Verdict::Admissible)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    /// Antisymmetrization norm for pair D: needs `l₁, l₂`.
    #[serde(rename = "altD")]
    AltD,
    /// Symmetrization norm for pairs E/O: needs `l`.
    #[serde(rename = "symE")]
    SymE,
}

impl std::str::FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "altD" | "altd" => Ok(Boundary::AltD),
            "symE" | "syme" => Ok(Boundary::SymE),
            _ => Err(Error::OutOfRange(format!("unknown boundary kind {s:?}"))),
        }
    }
}

/// Closed-form norm whose sign decides admissibility at the boundary:
///
/// * altD: `|x|(ν − l₁ − l₂) / ((l₁+1)(l₂+1))`
/// * symE: `2|x|(ν − 2l) / ((l+1)(l+2))` with `l = l₁`
pub fn boundary_value(
    kind: Boundary,
    x: &Rational,
    nu: &Rational,
    l1: u32,
    l2: Option<u32>,
) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::OutOfRange("boundary value needs x ≠ 0".into()));
    }
    let ax = x.abs();
    let l1r = int(l1 as i64);
    Ok(match kind {
        Boundary::AltD => {
            let l2 = l2.ok_or_else(|| Error::OutOfRange("altD needs l2".into()))?;
            let l2r = int(l2 as i64);
            ax * (nu - &l1r - &l2r) / ((l1r + int(1)) * (l2r + int(1)))
        }
        Boundary::SymE => {
            int(2) * ax * (nu - int(2) * &l1r) / ((&l1r + int(1)) * (l1r + int(2)))
        }
    })
}

/// The single-atom label probed by [`boundary_value`]: an atom at `x` of
/// mass `ν|x|` (the rest at 0) carrying
///
/// * altD: `Λ(x)`, `M(x)` with `ℓ = l₁, l₂` (x > 0) or first rows `l₁, l₂`
///   (x < 0);
/// * symE: `Λ(x) = (2^l)` (x > 0) or `(l)` (x < 0);
///
/// padded with single-box columns at 0 to satisfy the size conditions.
/// Fails when `ν|x| > 1`, which no probability measure realizes.
pub fn boundary_label(
    kind: Boundary,
    x: &Rational,
    nu: &Rational,
    l1: u32,
    l2: Option<u32>,
) -> Result<ReprLabel> {
    if x.is_zero() {
        return Err(Error::OutOfRange("boundary label needs x ≠ 0".into()));
    }
    let mass = nu * x.abs();
    if !mass.is_positive() || mass > int(1) {
        return Err(Error::OutOfRange(format!(
            "mass ν|x| = {} is not in (0, 1]",
            rational::format(&mass)
        )));
    }
    let zero = Rational::zero();
    let measure = ThomaMeasure::new([(x.clone(), mass.clone())], int(1) - mass)?;
    let line = |l: u32| {
        if x.is_positive() {
            Partition::column(l)
        } else {
            Partition::row(l)
        }
    };
    let pad = |d: &mut YoungDistribution, k: u32| -> Result<()> {
        if k > 0 {
            d.plant(zero.clone(), Partition::column(k))?;
        }
        Ok(())
    };
    Ok(match kind {
        Boundary::AltD => {
            let l2 = l2.ok_or_else(|| Error::OutOfRange("altD needs l2".into()))?;
            let mut lambda = YoungDistribution::from_entries([(x.clone(), line(l1))])?;
            let mut mu = YoungDistribution::from_entries([(x.clone(), line(l2))])?;
            pad(&mut lambda, l2.saturating_sub(l1))?;
            pad(&mut mu, l1.saturating_sub(l2))?;
            ReprLabel {
                pair: PairKind::D,
                depth: l1.max(l2),
                measure,
                lambda,
                mu: Some(mu),
            }
        }
        Boundary::SymE => {
            let shape = if x.is_positive() {
                Partition::new(vec![2; l1 as usize])?
            } else {
                Partition::row(l1)
            };
            let mut lambda = YoungDistribution::from_entries([(x.clone(), shape)])?;
            let odd = lambda.size() % 2;
            pad(&mut lambda, odd)?;
            ReprLabel {
                pair: PairKind::E,
                depth: lambda.size() / 2,
                measure,
                lambda,
                mu: None,
            }
        }
    })
}

fn dim_induced(dist: &YoungDistribution) -> BigInt {
    let mut num = factorial(dist.size());
    for (_, shape) in dist.entries() {
        num = num / factorial(shape.size()) * shape.dim_syt();
    }
    num
}

/// Dimension of the root module `V_Λ` (times `V_M` for pair D).
pub fn dim_root(label: &ReprLabel) -> Result<BigInt> {
    label.check_shape()?;
    Ok(label.distributions().map(dim_induced).product())
}

/// `binom(2(d₁+d₂), 2d₁)·m₁·m₂`.
pub fn mixture_dim(d1: u32, m1: &BigInt, d2: u32, m2: &BigInt) -> BigInt {
    binomial(2 * (d1 + d2) as u64, 2 * d1 as u64) * m1 * m2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dist(entries: &[(Rational, &[u32])]) -> YoungDistribution {
        YoungDistribution::from_entries(entries.iter().map(|(x, s)| (x.clone(), p(s)))).unwrap()
    }

    fn half_measure(x: Rational) -> ThomaMeasure {
        ThomaMeasure::new([(x, ratio(1, 2))], ratio(1, 2)).unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(is_thoma_measure(&half_measure(ratio(1, 2))).valid);
        let bad = ThomaMeasure::new([(ratio(1, 5), ratio(3, 10))], ratio(7, 10)).unwrap();
        let v = is_thoma_measure(&bad);
        assert!(!v.valid);
        assert_eq!(v.offending, vec![(ratio(1, 5), ratio(3, 2))]);
        assert!(is_thoma_measure(&ThomaMeasure::at_zero()).valid);
    }

    #[test]
    fn classify_d_examples() {
        let x = ratio(1, 2);
        let mut label = ReprLabel {
            pair: PairKind::D,
            depth: 1,
            measure: half_measure(x.clone()),
            lambda: dist(&[(x.clone(), &[1])]),
            mu: Some(dist(&[(x.clone(), &[1])])),
        };
        match classify(&label).unwrap() {
            Verdict::Rejected { condition, .. } => assert_eq!(condition, Condition::Inequality),
            v => panic!("{v:?}"),
        }
        label.mu = Some(dist(&[(int(0), &[1])]));
        assert_eq!(classify(&label).unwrap(), Verdict::Admissible);
        label.mu = None;
        assert!(classify(&label).is_err());
    }

    #[test]
    fn classify_e_examples() {
        let x = ratio(-1, 4);
        let mut label = ReprLabel {
            pair: PairKind::E,
            depth: 1,
            measure: half_measure(x.clone()),
            lambda: dist(&[(x.clone(), &[1, 1])]),
            mu: None,
        };
        assert_eq!(classify(&label).unwrap(), Verdict::Admissible);
        label.lambda = dist(&[(x.clone(), &[2])]);
        assert!(matches!(
            classify(&label).unwrap(),
            Verdict::Rejected { condition: Condition::Inequality, .. }
        ));
    }

    #[test]
    fn condition_order() {
        // odd ν at a negative atom fails parity before anything else for E
        let x = ratio(-1, 2);
        let label = ReprLabel {
            pair: PairKind::E,
            depth: 5,
            measure: half_measure(x.clone()),
            lambda: dist(&[(ratio(1, 3), &[1])]),
            mu: None,
        };
        assert!(matches!(
            classify(&label).unwrap(),
            Verdict::Rejected { condition: Condition::Parity, .. }
        ));
        // the same measure is fine for D; support fails next
        let label = ReprLabel {
            pair: PairKind::D,
            depth: 5,
            mu: Some(YoungDistribution::new()),
            ..label
        };
        assert!(matches!(
            classify(&label).unwrap(),
            Verdict::Rejected { condition: Condition::Support, .. }
        ));
    }

    #[test]
    fn boundary_examples() {
        let b = |k, x, nu, l1, l2| boundary_value(k, &x, &nu, l1, l2).unwrap();
        assert_eq!(b(Boundary::AltD, ratio(1, 2), int(1), 1, Some(1)), ratio(-1, 8));
        assert_eq!(b(Boundary::SymE, ratio(-1, 4), int(2), 1, None), int(0));
        assert_eq!(b(Boundary::SymE, ratio(-1, 4), int(2), 2, None), ratio(-1, 12));
        assert!(boundary_value(Boundary::AltD, &int(0), &int(1), 0, Some(0)).is_err());
        assert!(boundary_value(Boundary::AltD, &int(1), &int(1), 0, None).is_err());
    }

    #[test]
    fn boundary_labels_match_examples() {
        let l = boundary_label(Boundary::SymE, &ratio(-1, 4), &int(2), 1, None).unwrap();
        assert_eq!(l.lambda.at(&ratio(-1, 4)), Partition::row(1));
        assert_eq!(l.lambda.at(&int(0)), Partition::row(1));
        assert_eq!(classify(&l).unwrap(), Verdict::Admissible);
        let l = boundary_label(Boundary::AltD, &ratio(1, 2), &int(1), 1, Some(1)).unwrap();
        assert!(!classify(&l).unwrap().is_admissible());
        assert!(boundary_label(Boundary::AltD, &ratio(1, 2), &int(3), 1, Some(1)).is_err());
    }

    #[test]
    fn dimension_examples() {
        let x = ratio(1, 3);
        let mut label = ReprLabel {
            pair: PairKind::E,
            depth: 2,
            measure: ThomaMeasure::new([(x.clone(), int(1))], int(0)).unwrap(),
            lambda: dist(&[(x.clone(), &[2, 1, 1])]),
            mu: None,
        };
        assert_eq!(dim_root(&label).unwrap(), BigInt::from(3));
        label.lambda = dist(&[(x.clone(), &[1]), (int(0), &[1])]);
        assert_eq!(dim_root(&label).unwrap(), BigInt::from(2));
        let one = BigInt::from(1);
        assert_eq!(mixture_dim(1, &one, 1, &one), BigInt::from(6));
    }

    #[test]
    fn label_json_roundtrip() {
        let x = ratio(1, 2);
        let label = ReprLabel {
            pair: PairKind::D,
            depth: 1,
            measure: half_measure(x.clone()),
            lambda: dist(&[(x.clone(), &[1])]),
            mu: Some(dist(&[(int(0), &[1])])),
        };
        let s = serde_json::to_string(&label).unwrap();
        assert_eq!(serde_json::from_str::<ReprLabel>(&s).unwrap(), label);
        let v: serde_json::Value =
            serde_json::to_value(classify(&label).unwrap()).unwrap();
        assert_eq!(v, serde_json::json!({"verdict": "admissible"}));
    }
}
