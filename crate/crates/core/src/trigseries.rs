//! Truncated real Fourier series
//! `f(x) = a0/2 + Σ_{n=1}^{N} (a_n cos nx + b_n sin nx)`.
//!
//! Coefficients are stored 0-based: `a()[0]` is `a_1`. The JSON form
//! `{"a0": .., "a": [..], "b": [..]}` uses the same offset.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{Interval, PeriodicRule};

/// Coefficients of a truncated Fourier series of order `N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCoeffs", into = "RawCoeffs")]
pub struct FourierCoeffs {
    a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoeffs {
    #[serde(default)]
    a0: f64,
    #[serde(default)]
    a: Vec<f64>,
    #[serde(default)]
    b: Vec<f64>,
}

impl TryFrom<RawCoeffs> for FourierCoeffs {
    type Error = Error;

    fn try_from(raw: RawCoeffs) -> Result<Self> {
        FourierCoeffs::new(raw.a0, raw.a, raw.b)
    }
}

impl From<FourierCoeffs> for RawCoeffs {
    fn from(c: FourierCoeffs) -> Self {
        RawCoeffs {
            a0: c.a0,
            a: c.a,
            b: c.b,
        }
    }
}

impl FourierCoeffs {
    /// `a[k]` and `b[k]` hold `a_{k+1}` and `b_{k+1}`; both must have the
    /// same length and every entry must be finite.
    pub fn new(a0: f64, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidParams(format!(
                "cosine and sine coefficient arrays differ in length ({} vs {})",
                a.len(),
                b.len()
            )));
        }
        if !a0.is_finite() || a.iter().chain(&b).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("coefficients must be finite".into()));
        }
        Ok(Self { a0, a, b })
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            a0: 0.0,
            a: vec![0.0; order],
            b: vec![0.0; order],
        }
    }

    /// Builder: sets `a0`.
    pub fn with_a0(mut self, a0: f64) -> Self {
        self.a0 = a0;
        self
    }

    /// Builder: sets `a_n` (1-based), growing the order if needed.
    pub fn with_cos(mut self, n: usize, value: f64) -> Self {
        assert!(n >= 1, "harmonic index is 1-based");
        self.grow(n);
        self.a[n - 1] = value;
        self
    }

    /// Builder: sets `b_n` (1-based), growing the order if needed.
    pub fn with_sin(mut self, n: usize, value: f64) -> Self {
        assert!(n >= 1, "harmonic index is 1-based");
        self.grow(n);
        self.b[n - 1] = value;
        self
    }

    fn grow(&mut self, n: usize) {
        if n > self.a.len() {
            self.a.resize(n, 0.0);
            self.b.resize(n, 0.0);
        }
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// `a_n` for `n ≥ 1`; zero beyond the truncation order.
    pub fn cos_coeff(&self, n: usize) -> f64 {
        n.checked_sub(1).and_then(|k| self.a.get(k)).copied().unwrap_or(0.0)
    }

    /// `b_n` for `n ≥ 1`; zero beyond the truncation order.
    pub fn sin_coeff(&self, n: usize) -> f64 {
        n.checked_sub(1).and_then(|k| self.b.get(k)).copied().unwrap_or(0.0)
    }

    /// Harmonics as `(n, a_n, b_n)`.
    pub fn harmonics(&self) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        self.a.iter().zip(&self.b).enumerate().map(|(k, (&a, &b))| (k + 1, a, b))
    }

    /// The same coefficients with the constant term removed.
    pub fn without_mean(&self) -> Self {
        self.clone().with_a0(0.0)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            a0: self.a0 * factor,
            a: self.a.iter().map(|v| v * factor).collect(),
            b: self.b.iter().map(|v| v * factor).collect(),
        }
    }

    /// Coefficient-wise `self + other`; the shorter series is zero-padded.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().max(other.order());
        let mut out = Self::zeros(order).with_a0(self.a0 + other.a0);
        for n in 1..=order {
            out.a[n - 1] = self.cos_coeff(n) + other.cos_coeff(n);
            out.b[n - 1] = self.sin_coeff(n) + other.sin_coeff(n);
        }
        out
    }

    /// `Σ_{n≥1} (a_n² + b_n²)`.
    pub fn energy(&self) -> f64 {
        self.harmonics().map(|(_, a, b)| a * a + b * b).sum()
    }

    /// `Σ_{n≥1} n²(a_n² + b_n²)`.
    pub fn derivative_energy(&self) -> f64 {
        self.harmonics()
            .map(|(n, a, b)| (n * n) as f64 * (a * a + b * b))
            .sum()
    }
}

/// Full series value at `x`.
pub fn eval_series(c: &FourierCoeffs, x: f64) -> f64 {
    0.5 * c.a0 + oscillatory_sum(c, x, c.order())
}

/// Oscillatory part `Σ (a_n cos nx + b_n sin nx)` without the constant term.
pub fn eval_oscillatory(c: &FourierCoeffs, x: f64) -> f64 {
    oscillatory_sum(c, x, c.order())
}

/// Partial sum through harmonic `k`.
pub fn eval_partial_sum(c: &FourierCoeffs, x: f64, k: usize) -> Result<f64> {
    if k > c.order() {
        return Err(Error::IndexOutOfRange {
            index: k,
            order: c.order(),
        });
    }
    Ok(0.5 * c.a0 + oscillatory_sum(c, x, k))
}

fn oscillatory_sum(c: &FourierCoeffs, x: f64, k: usize) -> f64 {
    c.harmonics()
        .take(k)
        .map(|(n, a, b)| {
            let (s, co) = (n as f64 * x).sin_cos();
            a * co + b * s
        })
        .sum()
}

/// Term-wise derivative `Σ (-n a_n sin nx + n b_n cos nx)`.
pub fn eval_deriv_series(c: &FourierCoeffs, x: f64) -> f64 {
    c.harmonics()
        .map(|(n, a, b)| {
            let nf = n as f64;
            let (s, co) = (nf * x).sin_cos();
            nf * (b * co - a * s)
        })
        .sum()
}

/// Fourier coefficients of a 2π-periodic function up to order `order`.
///
/// All `2·order + 1` integrals `(1/π)∫_{-π}^{π} f(x)·{1, cos nx, sin nx} dx`
/// share one doubling trapezoid pass starting at `max(64, 4·order)` nodes,
/// so `f` is evaluated once per node.
pub fn coeffs_from_function<F>(f: F, order: usize, tol: f64) -> Result<FourierCoeffs>
where
    F: Fn(f64) -> f64,
{
    let rule = PeriodicRule::new(64.max(4 * order), tol / PI)?;
    let width = 2 * order + 1;
    let results = rule.integrate_many(
        |x, out| {
            let fx = f(x);
            out[0] = fx;
            for n in 1..=order {
                let (s, co) = (n as f64 * x).sin_cos();
                out[2 * n - 1] = fx * co;
                out[2 * n] = fx * s;
            }
        },
        width,
        Interval::symmetric_period(),
    )?;
    let coeff = |j: usize| results[j].value / PI;
    FourierCoeffs::new(
        coeff(0),
        (1..=order).map(|n| coeff(2 * n - 1)).collect(),
        (1..=order).map(|n| coeff(2 * n)).collect(),
    )
}

/// Majorant sums behind the uniform-convergence diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MTestReport {
    /// `Σ_{n≥1} (|a_n| + |b_n|)`.
    pub m_sum: f64,
    /// `Σ_{n≥1} n(|a_n| + |b_n|)`.
    pub weighted_m_sum: f64,
    /// `M_n = |a_n| + |b_n|` for `n = 1..=N`.
    pub majorants: Vec<f64>,
}

impl MTestReport {
    /// Share of `m_sum` carried by harmonics above `k`; zero for a zero series.
    pub fn tail_fraction(&self, k: usize) -> f64 {
        if self.m_sum == 0.0 {
            return 0.0;
        }
        let tail: f64 = self.majorants.iter().skip(k).sum();
        tail / self.m_sum
    }
}

pub fn mtest_report(c: &FourierCoeffs) -> MTestReport {
    let majorants: Vec<f64> = c.harmonics().map(|(_, a, b)| a.abs() + b.abs()).collect();
    let m_sum = majorants.iter().sum();
    let weighted_m_sum = majorants
        .iter()
        .enumerate()
        .map(|(k, m)| (k + 1) as f64 * m)
        .sum();
    MTestReport {
        m_sum,
        weighted_m_sum,
        majorants,
    }
}

/// Sup-norm bound on `series - partial_sum(k)`: `Σ_{n>k} (|a_n| + |b_n|)`.
pub fn uniform_error_bound(c: &FourierCoeffs, k: usize) -> Result<f64> {
    if k > c.order() {
        return Err(Error::IndexOutOfRange {
            index: k,
            order: c.order(),
        });
    }
    Ok(c.harmonics().skip(k).map(|(_, a, b)| a.abs() + b.abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn constant_term_is_halved() {
        let c = FourierCoeffs::zeros(0).with_a0(2.0);
        for x in [-3.0, 0.0, 1.7, 100.0] {
            assert_eq!(eval_series(&c, x), 1.0);
        }
    }

    #[test]
    fn first_cosine() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 1.0);
        assert_eq!(eval_series(&c, 0.0), 1.0);
        assert_eq!(eval_series(&c, PI), -1.0);
    }

    #[test]
    fn mixed_terms_at_half_pi() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 3.0).with_sin(2, 4.0);
        assert_abs_diff_eq!(eval_series(&c, FRAC_PI_2), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn partial_sums() {
        let c = FourierCoeffs::zeros(0).with_a0(0.8).with_cos(1, 1.0).with_cos(2, 1.0);
        assert_eq!(eval_partial_sum(&c, 0.3, 0).unwrap(), 0.4);
        assert_eq!(eval_partial_sum(&c, 0.3, 2).unwrap(), eval_series(&c, 0.3));
        let d = FourierCoeffs::zeros(0).with_cos(1, 1.0).with_cos(2, 1.0);
        assert_eq!(eval_partial_sum(&d, 0.0, 1).unwrap(), 1.0);
        assert_eq!(
            eval_partial_sum(&d, 0.0, 3),
            Err(Error::IndexOutOfRange { index: 3, order: 2 })
        );
    }

    #[test]
    fn series_is_constant_plus_oscillatory() {
        let c = FourierCoeffs::new(1.3, vec![0.2, -0.7, 0.1], vec![0.5, 0.0, -0.3]).unwrap();
        for k in 0..50 {
            let x = -4.0 + 0.17 * k as f64;
            assert_eq!(eval_series(&c, x), 0.5 * c.a0() + eval_oscillatory(&c, x));
        }
    }

    #[test]
    fn derivative_examples() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 1.0);
        assert_abs_diff_eq!(eval_deriv_series(&c, FRAC_PI_2), -1.0, epsilon = 1e-15);
        let s = FourierCoeffs::zeros(0).with_sin(1, 1.0);
        assert_eq!(eval_deriv_series(&s, 0.0), 1.0);
    }

    #[test]
    fn coefficients_of_cos3() {
        let c = coeffs_from_function(|x| (3.0 * x).cos(), 6, 1e-12).unwrap();
        assert_eq!(c.order(), 6);
        for n in 1..=6 {
            let expect = if n == 3 { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(c.cos_coeff(n), expect, epsilon = 1e-10);
            assert_abs_diff_eq!(c.sin_coeff(n), 0.0, epsilon = 1e-10);
        }
        assert_abs_diff_eq!(c.a0(), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn coefficients_of_constant() {
        let c = coeffs_from_function(|_| 5.0, 4, 1e-12).unwrap();
        assert_abs_diff_eq!(c.a0(), 10.0, epsilon = 1e-12);
        assert!(c.a().iter().chain(c.b()).all(|v| v.abs() <= 1e-12));
    }

    #[test]
    fn coefficients_of_abs_sine() {
        // |sin x| = 2/π - (4/π) Σ_k cos(2kx) / (4k² - 1)
        let c = coeffs_from_function(|x: f64| x.sin().abs(), 8, 1e-9).unwrap();
        assert_abs_diff_eq!(c.a0(), 4.0 / PI, epsilon = 1e-8);
        for n in 1..=8 {
            let expect = if n % 2 == 0 {
                -4.0 / (PI * ((n * n) as f64 - 1.0))
            } else {
                0.0
            };
            assert_abs_diff_eq!(c.cos_coeff(n), expect, epsilon = 1e-8);
            assert_abs_diff_eq!(c.sin_coeff(n), 0.0, epsilon = 1e-8);
        }
        assert_abs_diff_eq!(c.cos_coeff(2), -4.0 / (3.0 * PI), epsilon = 1e-8);
    }

    #[test]
    fn mtest_examples() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 3.0).with_sin(2, 4.0);
        let r = mtest_report(&c);
        assert_eq!(r.m_sum, 7.0);
        assert_eq!(r.weighted_m_sum, 11.0);
        assert_eq!(r.tail_fraction(1), 4.0 / 7.0);

        let z = mtest_report(&FourierCoeffs::zeros(5));
        assert_eq!((z.m_sum, z.weighted_m_sum, z.tail_fraction(2)), (0.0, 0.0, 0.0));
    }

    #[test]
    fn mtest_cubic_decay_bounded_by_zeta() {
        const ZETA_3: f64 = 1.2020569031595942;
        const ZETA_2: f64 = 1.6449340668482264;
        let mut prev = (0.0, 0.0);
        for order in [1usize, 2, 8, 16, 32, 64] {
            let a = (1..=order).map(|n| 1.0 / (n as f64).powi(3)).collect();
            let c = FourierCoeffs::new(0.0, a, vec![0.0; order]).unwrap();
            let r = mtest_report(&c);
            assert!(r.m_sum < ZETA_3 && r.weighted_m_sum < ZETA_2);
            assert!(r.m_sum > prev.0 && r.weighted_m_sum > prev.1);
            prev = (r.m_sum, r.weighted_m_sum);
        }
    }

    #[test]
    fn uniform_bound_examples() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 1.0).with_cos(2, 0.5);
        assert_eq!(uniform_error_bound(&c, 1).unwrap(), 0.5);
        assert_eq!(uniform_error_bound(&c, 2).unwrap(), 0.0);
        assert!(uniform_error_bound(&c, 3).is_err());
    }

    #[test]
    fn json_layout_is_zero_based() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 3.0).with_sin(2, 4.0);
        let js = serde_json::to_value(&c).unwrap();
        assert_eq!(js, serde_json::json!({"a0": 0.0, "a": [3.0, 0.0], "b": [0.0, 4.0]}));
        let back: FourierCoeffs = serde_json::from_value(js).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn json_rejects_mismatched_lengths() {
        let err = serde_json::from_str::<FourierCoeffs>(r#"{"a0": 1, "a": [1, 2], "b": [1]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("differ in length"), "{err}");
        assert!(serde_json::from_str::<FourierCoeffs>(r#"{"a0": 1, "c": []}"#).is_err());
    }

    #[test]
    fn new_rejects_non_finite() {
        assert!(FourierCoeffs::new(f64::NAN, vec![], vec![]).is_err());
        assert!(FourierCoeffs::new(0.0, vec![f64::INFINITY], vec![0.0]).is_err());
    }

    #[test]
    fn energies() {
        let c = FourierCoeffs::zeros(0).with_cos(1, 3.0).with_sin(2, 4.0);
        assert_eq!(c.energy(), 25.0);
        assert_eq!(c.derivative_energy(), 9.0 + 64.0);
    }
}
