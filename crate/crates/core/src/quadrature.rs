//! Numerical integration engines.
//!
//! Two rules cover every integral in the crate:
//!
//! * the uniform trapezoid rule for integrands that are periodic over the
//!   integration interval, refined by grid doubling (spectrally accurate, and
//!   exact for trigonometric polynomials below the Nyquist order);
//! * composite Gauss–Legendre for general intervals, refined by panel doubling.
//!
//! Every result carries the difference between its last two refinements as an
//! error estimate. That estimate is a convergence proxy, not a rigorous bound.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on trapezoid grid size.
pub const NODE_CAP: usize = 1 << 20;

/// Default absolute tolerance for periodic integrals.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default starting grid for periodic integrals.
pub const DEFAULT_MIN_NODES: usize = 64;

/// Relative agreement required between successive Gauss–Legendre refinements.
pub const GAUSS_REL_TOL: f64 = 1e-12;

const PANEL_CAP: usize = 1 << 14;

/// A closed integration interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    /// `[-π, π]`, the convention of the Fourier identities.
    pub fn symmetric_period() -> Self {
        Self { lo: -PI, hi: PI }
    }

    /// `[0, 2π]`, the convention of the curve pipeline.
    pub fn standard_period() -> Self {
        Self { lo: 0.0, hi: 2.0 * PI }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Value of an integral together with its refinement error proxy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// `|I_fine - I_coarse|` for the last two refinements; never negative.
    pub err_estimate: f64,
    /// Number of integrand evaluations on the finest grid.
    pub nodes_used: usize,
}

/// Settings for the doubling trapezoid rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodicRule {
    pub min_nodes: usize,
    pub tol: f64,
    pub max_nodes: usize,
}

impl Default for PeriodicRule {
    fn default() -> Self {
        Self {
            min_nodes: DEFAULT_MIN_NODES,
            tol: DEFAULT_TOL,
            max_nodes: NODE_CAP,
        }
    }
}

impl PeriodicRule {
    pub fn new(min_nodes: usize, tol: f64) -> Result<Self> {
        if min_nodes == 0 {
            return Err(Error::InvalidParams("min_nodes must be positive".into()));
        }
        if !(tol > 0.0) {
            return Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")));
        }
        Ok(Self {
            min_nodes,
            tol,
            max_nodes: NODE_CAP,
        })
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn integrate<F>(&self, f: F, interval: Interval) -> Result<QuadratureResult>
    where
        F: Fn(f64) -> f64,
    {
        let mut out = self.integrate_many(|x, vals| vals[0] = f(x), 1, interval)?;
        Ok(out.remove(0))
    }

    /// Integrates `width` integrands sharing one sampling pass.
    ///
    /// `f(x, vals)` writes the value of every integrand at `x` into `vals`.
    /// The grid is doubled until every component has converged, so an
    /// expensive common factor (a curve evaluation, say) is computed once per
    /// node.
    pub fn integrate_many<F>(
        &self,
        f: F,
        width: usize,
        interval: Interval,
    ) -> Result<Vec<QuadratureResult>>
    where
        F: Fn(f64, &mut [f64]),
    {
        if width == 0 {
            return Ok(Vec::new());
        }
        let span = interval.width();
        let max_nodes = self.max_nodes.max(2);
        let mut n = self.min_nodes.clamp(1, max_nodes / 2);

        let mut sums = vec![CompensatedSum::default(); width];
        let mut abs_sums = vec![0.0; width];
        let mut buf = vec![0.0; width];

        let mut sample = |x: f64, sums: &mut [CompensatedSum], abs_sums: &mut [f64]| {
            f(x, &mut buf);
            for (j, &v) in buf.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite { at: x });
                }
                sums[j].add(v);
                abs_sums[j] += v.abs();
            }
            Ok(())
        };

        let h = span / n as f64;
        for k in 0..n {
            sample(interval.lo + k as f64 * h, &mut sums, &mut abs_sums)?;
        }
        let mut values: Vec<f64> = sums.iter().map(|s| span * (s.total() / n as f64)).collect();
        let mut errs = vec![f64::INFINITY; width];

        loop {
            let n2 = 2 * n;
            if n2 > max_nodes {
                break;
            }
            let h2 = span / n2 as f64;
            for k in 0..n {
                sample(interval.lo + (2 * k + 1) as f64 * h2, &mut sums, &mut abs_sums)?;
            }
            let mut converged = true;
            for j in 0..width {
                let v = span * (sums[j].total() / n2 as f64);
                errs[j] = (v - values[j]).abs();
                values[j] = v;
                if errs[j] > self.effective_tol(span * abs_sums[j] / n2 as f64) {
                    converged = false;
                }
            }
            n = n2;
            if converged {
                return Ok(values
                    .into_iter()
                    .zip(errs)
                    .map(|(value, err_estimate)| QuadratureResult {
                        value,
                        err_estimate,
                        nodes_used: n,
                    })
                    .collect());
            }
        }

        let worst = errs.iter().cloned().fold(0.0, f64::max);
        Err(Error::NonConvergence {
            nodes: n,
            err_estimate: worst,
        })
    }

    /// The requested tolerance, floored at the rounding noise of a sum whose
    /// absolute integral is `abs_integral`.
    fn effective_tol(&self, abs_integral: f64) -> f64 {
        self.tol.max(16.0 * f64::EPSILON * abs_integral)
    }
}

/// Uniform trapezoid rule for a periodic integrand over one full period.
///
/// Starts from `min_nodes` and doubles until two successive values differ by
/// at most `tol` (or by rounding noise, for integrands of large magnitude).
pub fn integrate_periodic<F>(
    f: F,
    period_interval: Interval,
    min_nodes: usize,
    tol: f64,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    PeriodicRule::new(min_nodes, tol)?.integrate(f, period_interval)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the rule of the given order by Newton iteration on the
    /// Legendre polynomial.
    pub fn new(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidParams(format!(
                "Gauss-Legendre order must be at least 2, got {order}"
            )));
        }
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(order, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        if order % 2 == 1 {
            nodes[order / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Single-panel rule on `[a, b]`. Returns `(∫f, ∫|f|)`.
    pub fn panel<F>(&self, f: &F, a: f64, b: f64) -> Result<(f64, f64)>
    where
        F: Fn(f64) -> f64,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let t = mid + half * x;
            let v = f(t);
            if !v.is_finite() {
                return Err(Error::NonFinite { at: t });
            }
            sum += w * v;
            abs_sum += w * v.abs();
        }
        Ok((half * sum, half.abs() * abs_sum))
    }

    /// Composite rule over `panels` equal panels of `[lo, hi]`.
    pub fn composite<F>(&self, f: &F, lo: f64, hi: f64, panels: usize) -> Result<(f64, f64)>
    where
        F: Fn(f64) -> f64,
    {
        let h = (hi - lo) / panels as f64;
        let mut sum = CompensatedSum::default();
        let mut abs_sum = 0.0;
        for p in 0..panels {
            let a = lo + p as f64 * h;
            let b = if p + 1 == panels { hi } else { a + h };
            let (v, av) = self.panel(f, a, b)?;
            sum.add(v);
            abs_sum += av;
        }
        Ok((sum.total(), abs_sum))
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite Gauss–Legendre with panel doubling.
///
/// Stops once successive values agree to `1e-12` relative to the larger of
/// `|I|` and `∫|f|`, or when the panel cap is reached; in the latter case the
/// last difference is returned as the error estimate.
pub fn integrate_gauss<F>(f: F, interval: Interval, order: usize) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let rule = GaussLegendre::new(order)?;
    gauss_with_rule(&rule, &f, interval)
}

pub(crate) fn gauss_with_rule<F>(
    rule: &GaussLegendre,
    f: &F,
    interval: Interval,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let mut panels = 1;
    let (mut value, _) = rule.composite(f, interval.lo, interval.hi, panels)?;
    let mut err = f64::INFINITY;
    while panels < PANEL_CAP {
        panels *= 2;
        let (v, abs) = rule.composite(f, interval.lo, interval.hi, panels)?;
        err = (v - value).abs();
        value = v;
        if err <= GAUSS_REL_TOL * v.abs().max(abs) {
            break;
        }
    }
    Ok(QuadratureResult {
        value,
        err_estimate: err,
        nodes_used: panels * rule.order(),
    })
}

/// Running integral `t ↦ ∫_lo^t f` tabulated at `knots` equally spaced points.
///
/// The first row is `(lo, 0)` and the last is `(hi, ∫_lo^hi f)`. Each
/// sub-interval is integrated with order-8 Gauss–Legendre. A non-positive
/// value of `f` at a knot (or a non-positive increment) is reported as
/// [`Error::NonMonotone`], since the table is meant to be inverted.
pub fn cumulative_integral<F>(f: F, interval: Interval, knots: usize) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> f64,
{
    if knots < 2 {
        return Err(Error::InvalidParams(format!("need at least 2 knots, got {knots}")));
    }
    let rule = GaussLegendre::new(8)?;
    let segments = knots - 1;
    let knot = |i: usize| {
        if i == segments {
            interval.hi
        } else {
            interval.lo + interval.width() * (i as f64 / segments as f64)
        }
    };
    let check = |t: f64| {
        let v = f(t);
        if !v.is_finite() {
            Err(Error::NonFinite { at: t })
        } else if v <= 0.0 {
            Err(Error::NonMonotone { at: t, value: v })
        } else {
            Ok(())
        }
    };

    check(interval.lo)?;
    let mut table = Vec::with_capacity(knots);
    table.push((interval.lo, 0.0));
    let mut acc = CompensatedSum::default();
    for i in 1..=segments {
        let (a, b) = (knot(i - 1), knot(i));
        check(b)?;
        let inc = gauss_with_rule(&rule, &f, Interval::new(a, b)?)?.value;
        if inc <= 0.0 {
            return Err(Error::NonMonotone { at: a, value: inc });
        }
        acc.add(inc);
        table.push((b, acc.total()));
    }
    Ok(table)
}

/// Neumaier-compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::default();
        for v in iter {
            s.add(v);
        }
        s
    }
}
