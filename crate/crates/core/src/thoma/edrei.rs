//! Extracting the largest `α` from a coefficient sequence `m(k)`.
//!
//! The limit `α = lim m(k+1)/m(k)` has no finite-data characterization, so
//! two routes are tried. If the sequence satisfies a short linear
//! recurrence (always the case for `H = ∏(1+β_j t)/∏(1-α_i t)`), the limit
//! is a root of its characteristic polynomial and is recovered exactly.
//! Otherwise the last few ratios must agree to within a tolerance.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, int, Rational};
use crate::thoma::PowerSeries;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeelRoute {
    /// `α` is an exact root of the sequence's minimal recurrence.
    Exact,
    /// `α` is the last ratio `m(N)/m(N-1)`, after the last three ratios
    /// agreed to within the tolerance.
    Ratio,
    /// `α = 1`: the sequence is a pure `1/(1-t)` factor; nothing to peel.
    Trivial,
    /// The ratios decay to zero (`k·m(k)/m(k-1)` bounded and
    /// non-increasing, or the sequence terminates): `α = 0`.
    NoGeometricFactor,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeelOptions {
    /// Agreement required between the last three ratios on the ratio route.
    pub tol: f64,
    /// Try the exact recurrence route first.
    pub exact: bool,
}

impl Default for PeelOptions {
    fn default() -> Self {
        PeelOptions {
            tol: 1e-9,
            exact: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeelOutcome {
    pub route: PeelRoute,
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    pub alpha_float: f64,
    /// `m̃(k) = (1-α)^{-k}(m(k) - α m(k-1))`; for the trivial route, the
    /// plain differences `m(k) - m(k-1)`.
    #[serde(with = "rational::serde_vec")]
    pub peeled: Vec<Rational>,
    /// Coefficients of `H(t) - H₁(αt)·H̃((1-α)t)` up to the input length.
    #[serde(with = "rational::serde_vec")]
    pub residual: Vec<Rational>,
}

impl PeelOutcome {
    pub fn residual_is_zero(&self) -> bool {
        self.residual.iter().all(Zero::is_zero)
    }
}

/// Minimal connection polynomial `C` (with `C[0] = 1`) such that
/// `Σ_{i=0}^{L} C[i] s[n-i] = 0` for all `L ≤ n < len`.
fn berlekamp_massey(s: &[Rational]) -> Vec<Rational> {
    let mut c = vec![Rational::one()];
    let mut b = vec![Rational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = Rational::one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l {
            d += &c[i] * &s[n - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &bd;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, Rational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &coef * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, Rational::zero());
    c
}

/// Evaluates `x^L + C[1] x^{L-1} + … + C[L]`.
fn char_poly_at(c: &[Rational], x: &Rational) -> Rational {
    c.iter().fold(Rational::zero(), |acc, ci| acc * x + ci)
}

/// Runs the recurrence forward in floating point to estimate the limit
/// ratio.
fn float_ratio_limit(c: &[Rational], s: &[Rational]) -> Option<f64> {
    let l = c.len() - 1;
    let cf: Vec<f64> = c.iter().map(rational::to_f64).collect();
    let mut w: Vec<f64> = s[s.len() - l..].iter().map(rational::to_f64).collect();
    let mut ratio = f64::NAN;
    for _ in 0..100_000 {
        let next: f64 = -(1..=l).map(|i| cf[i] * w[l - i]).sum::<f64>();
        ratio = next / w[l - 1];
        w.rotate_left(1);
        w[l - 1] = next;
        let scale = w.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        if scale == 0.0 || !scale.is_finite() {
            return None;
        }
        w.iter_mut().for_each(|x| *x /= scale);
    }
    ratio.is_finite().then_some(ratio)
}

/// Continued-fraction convergents of `x` with denominators up to `qmax`.
fn convergents(x: f64, qmax: i64) -> Vec<Rational> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    let mut out = Vec::new();
    for _ in 0..40 {
        let a = y.floor();
        if a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        let (Some(h), Some(k)) = (
            a.checked_mul(h1).and_then(|v| v.checked_add(h0)),
            a.checked_mul(k1).and_then(|v| v.checked_add(k0)),
        ) else {
            break;
        };
        if k > qmax {
            break;
        }
        out.push(rational::ratio(h, k));
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = y - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Exact dominant root, when the sequence has a short enough recurrence and
/// the limit ratio is rational with modest denominator.
fn exact_alpha(m: &[Rational]) -> Option<Rational> {
    let c = berlekamp_massey(m);
    let l = c.len() - 1;
    if l == 0 || 2 * l + 4 > m.len() {
        return None;
    }
    let approx = float_ratio_limit(&c, m)?;
    convergents(approx, 1_000_000).into_iter().find(|r| {
        char_poly_at(&c, r).is_zero()
            && (rational::to_f64(r) - approx).abs() <= 1e-2 * approx.abs().max(1.0)
    })
}

fn peel_with(m: &[Rational], alpha: &Rational) -> (Vec<Rational>, Vec<Rational>) {
    let order = m.len() - 1;
    let one_minus = Rational::one() - alpha;
    let mut peeled = Vec::with_capacity(m.len());
    let mut scale = Rational::one();
    for k in 0..m.len() {
        let prev = if k == 0 { Rational::zero() } else { alpha * &m[k - 1] };
        peeled.push((&m[k] - prev) / &scale);
        scale *= &one_minus;
    }
    let h1 = PowerSeries::geometric(alpha, order);
    let tilde = PowerSeries::new(peeled.clone())
        .expect("non-empty")
        .scale_arg(&one_minus);
    let h = PowerSeries::new(m.to_vec()).expect("non-empty");
    let residual = (&h - &(&h1 * &tilde)).into_coeffs();
    (peeled, residual)
}

fn outcome(route: PeelRoute, alpha: Rational, m: &[Rational]) -> PeelOutcome {
    let (peeled, residual) = if route == PeelRoute::Trivial {
        let diffs: Vec<Rational> = (0..m.len())
            .map(|k| if k == 0 { m[0].clone() } else { &m[k] - &m[k - 1] })
            .collect();
        let h = PowerSeries::new(m.to_vec()).expect("non-empty");
        let rest = PowerSeries::new(diffs.clone()).expect("non-empty");
        let h1 = PowerSeries::geometric(&Rational::one(), m.len() - 1);
        (diffs, (&h - &(&h1 * &rest)).into_coeffs())
    } else {
        peel_with(m, &alpha)
    };
    PeelOutcome {
        route,
        alpha_float: rational::to_f64(&alpha),
        alpha,
        peeled,
        residual,
    }
}

fn check_alpha(route: PeelRoute, alpha: Rational, m: &[Rational]) -> Result<PeelOutcome> {
    if alpha > Rational::one() {
        return Err(Error::OutOfRange(format!(
            "ratio estimate {} exceeds 1",
            rational::format(&alpha)
        )));
    }
    if alpha.is_one() {
        return Ok(outcome(PeelRoute::Trivial, alpha, m));
    }
    Ok(outcome(route, alpha, m))
}

/// Peels the largest geometric factor `1/(1-αt)` off `H(t) = Σ m(k) t^k`.
pub fn edrei_peel(m: &[Rational], opts: PeelOptions) -> Result<PeelOutcome> {
    if m.len() < 4 {
        return Err(Error::InsufficientCoefficients {
            needed: 4,
            have: m.len(),
        });
    }
    if !m[0].is_positive() || m.iter().any(Signed::is_negative) {
        return Err(Error::InvalidParams("m(k) must be positive".into()));
    }
    if m.iter().any(Zero::is_zero) {
        return check_alpha(PeelRoute::NoGeometricFactor, Rational::zero(), m);
    }
    if opts.exact {
        if let Some(alpha) = exact_alpha(m) {
            return check_alpha(PeelRoute::Exact, alpha, m);
        }
    }
    let n = m.len() - 1;
    let ratios: Vec<Rational> = (n - 2..=n).map(|k| &m[k] / &m[k - 1]).collect();
    let rf: Vec<f64> = ratios.iter().map(rational::to_f64).collect();
    if (rf[2] - rf[1]).abs() <= opts.tol && (rf[1] - rf[0]).abs() <= opts.tol {
        return check_alpha(PeelRoute::Ratio, ratios[2].clone(), m);
    }
    // k·r_k non-increasing: ratios decay at least like 1/k
    let weighted: Vec<Rational> = ratios
        .iter()
        .enumerate()
        .map(|(i, r)| r * int((n - 2 + i) as i64))
        .collect();
    if weighted[0] >= weighted[1] && weighted[1] >= weighted[2] {
        return check_alpha(PeelRoute::NoGeometricFactor, Rational::zero(), m);
    }
    Err(Error::NotConverged(format!(
        "last ratios {:.3e}, {:.3e}, {:.3e} differ by more than {:e}",
        rf[0], rf[1], rf[2], opts.tol
    )))
}
