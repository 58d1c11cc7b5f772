//! Orthogonality, Parseval and Wirtinger checks on truncated series.
//!
//! Each check evaluates the integral side by quadrature and the coefficient
//! side by direct summation, so the two routes are independent.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{Interval, PeriodicRule, QuadratureResult};
use crate::trigseries::{eval_deriv_series, eval_oscillatory, FourierCoeffs};

/// Tail energy below which a zero-mean series counts as a pure first harmonic.
pub const EQUALITY_WITNESS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProductKind {
    #[serde(rename = "cos*cos")]
    CosCos,
    #[serde(rename = "sin*sin")]
    SinSin,
    #[serde(rename = "cos*sin")]
    CosSin,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [ProductKind::CosCos, ProductKind::SinSin, ProductKind::CosSin];

    pub fn label(self) -> &'static str {
        match self {
            ProductKind::CosCos => "cos*cos",
            ProductKind::SinSin => "sin*sin",
            ProductKind::CosSin => "cos*sin",
        }
    }

    fn eval(self, n: usize, m: usize, x: f64) -> f64 {
        let (sn, cn) = (n as f64 * x).sin_cos();
        let (sm, cm) = (m as f64 * x).sin_cos();
        match self {
            ProductKind::CosCos => cn * cm,
            ProductKind::SinSin => sn * sm,
            ProductKind::CosSin => cn * sm,
        }
    }

    /// `π δ_nm` for like products, zero for mixed ones.
    pub fn expected(self, n: usize, m: usize) -> f64 {
        match self {
            ProductKind::CosSin => 0.0,
            _ if n == m => PI,
            _ => 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityEntry {
    pub kind: ProductKind,
    pub n: usize,
    pub m: usize,
    pub computed: f64,
    pub expected: f64,
    pub residual: f64,
}

/// Integrals of `cos·cos`, `sin·sin` and `cos·sin` over `[-π, π]` for all
/// `1 ≤ n, m ≤ max_order`, ordered by kind, then `n`, then `m`.
pub fn orthogonality_table(max_order: usize, tol: f64) -> Result<Vec<OrthogonalityEntry>> {
    orthogonality_table_with(max_order, &PeriodicRule::new(64.max(4 * max_order), tol)?)
}

/// [`orthogonality_table`] with an explicit rule. The starting grid is
/// raised above the Nyquist order of the products if needed.
pub fn orthogonality_table_with(max_order: usize, rule: &PeriodicRule) -> Result<Vec<OrthogonalityEntry>> {
    if max_order == 0 {
        return Err(Error::InvalidParams("max_order must be at least 1".into()));
    }
    let rule = above_nyquist(rule, max_order);
    let cells: Vec<(ProductKind, usize, usize)> = ProductKind::ALL
        .iter()
        .flat_map(|&k| (1..=max_order).flat_map(move |n| (1..=max_order).map(move |m| (k, n, m))))
        .collect();
    cells
        .into_par_iter()
        .map(|(kind, n, m)| {
            let computed = rule
                .integrate(|x| kind.eval(n, m, x), Interval::symmetric_period())?
                .value;
            let expected = kind.expected(n, m);
            Ok(OrthogonalityEntry {
                kind,
                n,
                m,
                computed,
                expected,
                residual: (computed - expected).abs(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsevalReport {
    /// `(1/π)∫ f²` by quadrature.
    pub lhs: f64,
    /// `a0²/2 + Σ (a_n² + b_n²)`.
    pub rhs: f64,
    /// `∫ a0·S(x) dx`, which must vanish.
    pub cross_term: f64,
    /// `∫ S²` by quadrature, with `S` the oscillatory part.
    pub squared_term: f64,
    /// `|∫ S² - π Σ (a_n² + b_n²)|`.
    pub squared_term_residual: f64,
    pub residual: f64,
    pub interval: Interval,
    pub nodes_used: usize,
}

fn series_rule(c: &FourierCoeffs, tol: f64) -> Result<PeriodicRule> {
    PeriodicRule::new(64.max(4 * c.order()), tol)
}

/// Raises the starting grid to `2·order + 2` nodes, the smallest grid on
/// which products of two harmonics of order `≤ order` integrate exactly.
fn above_nyquist(rule: &PeriodicRule, order: usize) -> PeriodicRule {
    PeriodicRule {
        min_nodes: rule.min_nodes.max(2 * order + 2),
        ..*rule
    }
}

/// Parseval's identity for a truncated series on `[-π, π]`.
pub fn parseval_check(c: &FourierCoeffs, tol: f64) -> Result<ParsevalReport> {
    parseval_check_with(c, &series_rule(c, tol)?)
}

pub fn parseval_check_with(c: &FourierCoeffs, rule: &PeriodicRule) -> Result<ParsevalReport> {
    let interval = Interval::symmetric_period();
    let half_a0 = 0.5 * c.a0();
    let r = above_nyquist(rule, c.order()).integrate_many(
        |x, out| {
            let s = eval_oscillatory(c, x);
            let f = half_a0 + s;
            out[0] = f * f;
            out[1] = c.a0() * s;
            out[2] = s * s;
        },
        3,
        interval,
    )?;
    let lhs = r[0].value / PI;
    let rhs = 0.5 * c.a0() * c.a0() + c.energy();
    Ok(ParsevalReport {
        lhs,
        rhs,
        cross_term: r[1].value,
        squared_term: r[2].value,
        squared_term_residual: (r[2].value - PI * c.energy()).abs(),
        residual: (lhs - rhs).abs(),
        interval,
        nodes_used: max_nodes(&r),
    })
}

/// Parseval applied to the term-wise derivative: returns
/// `((1/π)∫ f'², Σ n²(a_n² + b_n²))`.
pub fn deriv_parseval_check(c: &FourierCoeffs, tol: f64) -> Result<(f64, f64)> {
    deriv_parseval_check_with(c, &series_rule(c, tol)?)
}

pub fn deriv_parseval_check_with(c: &FourierCoeffs, rule: &PeriodicRule) -> Result<(f64, f64)> {
    let r = above_nyquist(rule, c.order()).integrate(
        |x| eval_deriv_series(c, x).powi(2),
        Interval::symmetric_period(),
    )?;
    Ok((r.value / PI, c.derivative_energy()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WirtingerReport {
    /// `∫_0^{2π} f²`.
    pub int_f_sq: f64,
    /// `∫_0^{2π} f'²`.
    pub int_fprime_sq: f64,
    /// `Σ (a_n² + b_n²)`.
    pub parseval_f: f64,
    /// `Σ n²(a_n² + b_n²)`.
    pub parseval_fprime: f64,
    /// `Σ (n² - 1)(a_n² + b_n²)`, summed directly.
    pub domination_gap: f64,
    /// `int_fprime_sq - int_f_sq`.
    pub slack: f64,
    /// `Σ_{n≥2} n²(a_n² + b_n²)`.
    pub tail_energy: f64,
    /// `(a_1, b_1)` when the series is a pure first harmonic.
    pub equality_witness: Option<(f64, f64)>,
    pub interval: Interval,
}

/// Wirtinger's inequality `∫f² ≤ ∫f'²` for a zero-mean series on `[0, 2π]`.
///
/// Fails with [`Error::ZeroMeanViolated`] when `|a0| > tol`. The equality
/// witness is populated iff the energy above the first harmonic is at most
/// `tol`.
pub fn wirtinger_check(c: &FourierCoeffs, tol: f64) -> Result<WirtingerReport> {
    wirtinger_check_with(c, tol, &series_rule(c, tol)?)
}

/// [`wirtinger_check`] with an explicit quadrature rule; `tol` governs the
/// zero-mean hypothesis and the equality witness only.
pub fn wirtinger_check_with(c: &FourierCoeffs, tol: f64, rule: &PeriodicRule) -> Result<WirtingerReport> {
    if c.a0().abs() > tol {
        return Err(Error::ZeroMeanViolated { a0: c.a0(), tol });
    }
    let interval = Interval::standard_period();
    let r = above_nyquist(rule, c.order()).integrate_many(
        |x, out| {
            out[0] = (0.5 * c.a0() + eval_oscillatory(c, x)).powi(2);
            out[1] = eval_deriv_series(c, x).powi(2);
        },
        2,
        interval,
    )?;
    let tail_energy: f64 = c
        .harmonics()
        .skip(1)
        .map(|(n, a, b)| (n * n) as f64 * (a * a + b * b))
        .sum();
    let domination_gap = c
        .harmonics()
        .map(|(n, a, b)| ((n * n) as f64 - 1.0) * (a * a + b * b))
        .sum();
    let equality_witness =
        (tail_energy <= tol).then(|| (c.cos_coeff(1), c.sin_coeff(1)));
    Ok(WirtingerReport {
        int_f_sq: r[0].value,
        int_fprime_sq: r[1].value,
        parseval_f: c.energy(),
        parseval_fprime: c.derivative_energy(),
        domination_gap,
        slack: r[1].value - r[0].value,
        tail_energy,
        equality_witness,
        interval,
    })
}

fn max_nodes(r: &[QuadratureResult]) -> usize {
    r.iter().map(|q| q.nodes_used).max().unwrap_or(0)
}
