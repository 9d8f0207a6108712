use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, int, Rational};
use crate::{Error, Result};

/// A formal power series truncated after `t^order`, with exact rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerSeries {
    #[serde(with = "rational::serde_vec")]
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// `coeffs[k]` is the coefficient of `t^k`; the order is `len - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InsufficientCoefficients { needed: 1, have: 0 });
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `1/(1 - a t)`.
    pub fn geometric(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut x = Rational::one();
        for _ in 0..=order {
            coeffs.push(x.clone());
            x *= a;
        }
        PowerSeries { coeffs }
    }

    /// `e^{g t}`.
    pub fn exp_linear(g: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut x = Rational::one();
        for k in 0..=order {
            coeffs.push(x.clone());
            x = x * g / int(k as i64 + 1);
        }
        PowerSeries { coeffs }
    }

    /// `1 + b t`.
    pub fn linear(b: &Rational, order: usize) -> Self {
        let mut s = Self::one(order);
        if order >= 1 {
            s.coeffs[1] = b.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    /// `1/H`, requiring a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let mut inv: Vec<Rational> = Vec::with_capacity(n + 1);
        inv.push(Rational::one() / a0);
        for k in 1..=n {
            let s: Rational = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-s / a0);
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// `H'`, known to one order less (order 0 stays order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * int(k as i64))
            .collect();
        PowerSeries { coeffs }
    }

    /// `H(c t)`.
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut x = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &x;
                x *= c;
                v
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// `exp(A)` for a series with zero constant term, by the recurrence
    /// `k e_k = Σ_{j=1}^{k} j a_j e_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::OutOfRange("exp needs a zero constant term".into()));
        }
        let n = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
        e.push(Rational::one());
        for k in 1..=n {
            let s: Rational = (1..=k)
                .map(|j| &self.coeffs[j] * int(j as i64) * &e[k - j])
                .sum();
            e.push(s / int(k as i64));
        }
        Ok(PowerSeries { coeffs: e })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&j| !self.coeffs[j].is_zero())
                    .map(|j| &self.coeffs[j] * &rhs.coeffs[k - j])
                    .sum()
            })
            .collect();
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn geometric_times_linear_is_one() {
        let g = PowerSeries::geometric(&int(1), 10);
        let l = PowerSeries::linear(&int(-1), 10);
        assert_eq!(&g * &l, PowerSeries::one(10));
        assert_eq!(l.reciprocal().unwrap(), g);
    }

    #[test]
    fn exp_of_linear() {
        let t = PowerSeries::new(vec![int(0), ratio(1, 3)]).unwrap().truncate(8);
        assert_eq!(t.exp().unwrap(), PowerSeries::exp_linear(&ratio(1, 3), 8));
        assert!(PowerSeries::one(3).exp().is_err());
    }

    #[test]
    fn reciprocal_requires_constant_term() {
        assert_eq!(PowerSeries::zero(3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn derivative_and_scaling() {
        let s = PowerSeries::new(vec![int(1), int(2), int(3)]).unwrap();
        assert_eq!(s.derivative().coeffs(), &[int(2), int(6)]);
        assert_eq!(s.scale_arg(&int(-1)).coeffs(), &[int(1), int(-2), int(3)]);
        assert_eq!(PowerSeries::one(0).derivative(), PowerSeries::zero(0));
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = PowerSeries::one(5);
        let b = PowerSeries::one(2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
    }
}
