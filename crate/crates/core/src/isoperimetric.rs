//! Shoelace area and the chain of bounds ending in `A ≤ L²/4π`.
//!
//! For a unit-speed curve of length `L`, rescaled to `(f, g)` on `[0, 2π]`:
//!
//! ```text
//! A = ½∫(f g' − g f')          reparametrized shoelace
//!   = ∫ f g'                   integration by parts
//!   ≤ ½∫(f² + g'²)             2uv ≤ u² + v² pointwise
//!   ≤ ½∫(f'² + g'²)            Wirtinger, after centring f
//!   = ½·(L/2π)²·2π = L²/4π     f'² + g'² = (L/2π)²
//! ```
//!
//! [`hurwitz_report`] evaluates every line independently and records the
//! residual of each identity and the slack of each inequality.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curve::{
    arc_constraint_residual, derivative_probe, is_simple, make_reparam, perimeter,
    reparametrize_unit_speed, CurveSpec, ReparamCurve, DEFAULT_KNOTS,
};
use crate::error::Result;
use crate::quadrature::{Interval, PeriodicRule, DEFAULT_MIN_NODES, DEFAULT_TOL};
use crate::spectral::{deriv_parseval_check, parseval_check, wirtinger_check};
use crate::trigseries::coeffs_from_function;

/// Grid used by [`amgm_pointwise_max_violation`].
pub const AMGM_GRID: usize = 1024;

/// Signed area `½∫_0^T (x y' − y x') dt`; positive for counterclockwise curves.
pub fn area_shoelace(c: &CurveSpec) -> Result<f64> {
    let r = PeriodicRule::default().integrate(
        |t| {
            let ((x, y), (vx, vy)) = c.eval(t);
            x * vy - y * vx
        },
        Interval::new(0.0, c.period())?,
    )?;
    Ok(0.5 * r.value)
}

fn reparam_integrals(rc: &ReparamCurve, tol: f64) -> Result<(f64, f64)> {
    let r = PeriodicRule::new(DEFAULT_MIN_NODES, tol)?.integrate_many(
        |th, out| {
            let s = rc.sample(th);
            out[0] = s.f * s.dg;
            out[1] = s.g * s.df;
        },
        2,
        Interval::standard_period(),
    )?;
    Ok((r[0].value, r[1].value))
}

/// `½∫_0^{2π} (f g' − g f') dθ`.
pub fn area_reparam(rc: &ReparamCurve) -> Result<f64> {
    let (fdg, gdf) = reparam_integrals(rc, DEFAULT_TOL)?;
    Ok(0.5 * (fdg - gdf))
}

/// `|∫ f g' + ∫ g f'|`; zero because `f g` is 2π-periodic.
pub fn ibp_check(rc: &ReparamCurve) -> Result<f64> {
    let (fdg, gdf) = reparam_integrals(rc, DEFAULT_TOL)?;
    Ok((fdg + gdf).abs())
}

/// `∫_0^{2π} f g' dθ`.
pub fn area_simplified(rc: &ReparamCurve) -> Result<f64> {
    Ok(reparam_integrals(rc, DEFAULT_TOL)?.0)
}

/// `max_θ [2 f g' − (f² + g'²)]` over a 1024-point grid. Never positive
/// beyond rounding.
pub fn amgm_pointwise_max_violation(rc: &ReparamCurve) -> f64 {
    rc.samples(AMGM_GRID)
        .iter()
        .map(|s| 2.0 * s.f * s.dg - (s.f * s.f + s.dg * s.dg))
        .fold(f64::NEG_INFINITY, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HurwitzSettings {
    /// Order of the Fourier expansion of `f` used for the Parseval checks.
    pub fourier_order: usize,
    pub tol: f64,
    /// Knots of the arc-length table.
    pub knots: usize,
    /// Polygon size for the self-intersection probe.
    pub simplicity_samples: usize,
}

impl Default for HurwitzSettings {
    fn default() -> Self {
        Self {
            fourier_order: 32,
            tol: 1e-10,
            knots: DEFAULT_KNOTS,
            simplicity_samples: 1024,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Counterclockwise,
    Clockwise,
}

/// Evidence for every step of the chain on one curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsoperimetricReport {
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "A_shoelace")]
    pub area_shoelace: f64,
    #[serde(rename = "A_reparam")]
    pub area_reparam: f64,
    #[serde(rename = "A_simplified")]
    pub area_simplified: f64,
    pub orientation: Orientation,
    pub ibp_residual: f64,
    /// `max 2fg' − (f² + g'²)` on the grid.
    pub amgm_max_violation: f64,
    /// `½∫(f̃² + g'²)` with `f̃ = f − mean(f)`.
    pub amgm_bound: f64,
    /// `½∫(f'² + g'²)`.
    pub wirtinger_bound: f64,
    /// `L²/4π`.
    pub isoperimetric_bound: f64,
    /// `|wirtinger_bound − L²/4π|`.
    pub final_bound_residual: f64,
    pub arc_constraint_residual: f64,
    /// Mean of `f`, removed before applying Wirtinger (an x-translation).
    pub f_mean: f64,
    /// `|(1/π)∫f̃² − Σ(a_n² + b_n²)|` for the truncated expansion of `f̃`.
    pub parseval_residual: f64,
    /// `|(1/π)∫f'² − Σ n²(a_n² + b_n²)|` for the same expansion.
    pub deriv_parseval_residual: f64,
    /// Energy of `f̃` beyond the truncation order, `(1/π)∫f̃² − Σ(a_n² + b_n²)`.
    pub tail_energy: f64,
    pub truncation_warning: bool,
    /// `∫f'² − ∫f̃²`.
    pub wirtinger_slack: f64,
    /// `f̃` is a pure first harmonic, the equality case of Wirtinger.
    pub wirtinger_equality: bool,
    /// `4π|A| / L²`.
    pub ratio: f64,
    /// `L² − 4π|A|`.
    pub deficit: f64,
    /// Sampled self-intersection test; advisory only.
    pub simple_probe: bool,
    /// Velocity vs finite-difference consistency of the input; advisory only.
    pub derivative_probe: f64,
    pub chain_ok: bool,
    pub fourier_order: usize,
    pub tol: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Runs the whole chain with default knots and probe sizes.
pub fn hurwitz_report(c: &CurveSpec, fourier_order: usize, tol: f64) -> Result<IsoperimetricReport> {
    hurwitz_report_with(
        c,
        &HurwitzSettings {
            fourier_order,
            tol,
            ..HurwitzSettings::default()
        },
    )
}

pub fn hurwitz_report_with(c: &CurveSpec, settings: &HurwitzSettings) -> Result<IsoperimetricReport> {
    let tol = settings.tol;
    c.validate()?;

    let length = perimeter(c)?;
    let area = area_shoelace(c)?;
    let unit = reparametrize_unit_speed(c, settings.knots)?;
    let rc = make_reparam(&unit)?;

    let coeffs = coeffs_from_function(|th| rc.f(th), settings.fourier_order, tol)?;
    let f_mean = 0.5 * coeffs.a0();
    let centred = coeffs.without_mean();

    let r = PeriodicRule::new(DEFAULT_MIN_NODES, tol)?.integrate_many(
        |th, out| {
            let s = rc.sample(th);
            let fc = s.f - f_mean;
            out[0] = s.f * s.dg;
            out[1] = s.g * s.df;
            out[2] = fc * fc;
            out[3] = s.dg * s.dg;
            out[4] = s.df * s.df;
        },
        5,
        Interval::standard_period(),
    )?;
    let [fdg, gdf, fc_sq, dg_sq, df_sq] = [0, 1, 2, 3, 4].map(|j| r[j].value);

    let area_reparam = 0.5 * (fdg - gdf);
    let area_simplified = fdg;
    let amgm_bound = 0.5 * (fc_sq + dg_sq);
    let wirtinger_bound = 0.5 * (df_sq + dg_sq);
    let isoperimetric_bound = length * length / (4.0 * PI);

    let parseval = parseval_check(&centred, tol)?;
    let (dl, dr) = deriv_parseval_check(&centred, tol)?;
    let wirtinger = wirtinger_check(&centred, tol)?;
    let tail_energy = fc_sq / PI - centred.energy();
    let truncation_warning = tail_energy.abs() > tol;
    let mut warnings = Vec::new();
    if truncation_warning {
        warnings.push(format!(
            "Fourier tail energy of f beyond order {} is {:e} (threshold {:e})",
            settings.fourier_order, tail_energy, tol
        ));
    }

    let abs_area = area.abs();
    let slack_tol = tol * (1.0 + isoperimetric_bound);
    let chain_ok = area_simplified <= amgm_bound + slack_tol
        && amgm_bound <= wirtinger_bound + slack_tol
        && 4.0 * PI * abs_area <= length * length * (1.0 + tol);

    Ok(IsoperimetricReport {
        length,
        area_shoelace: area,
        area_reparam,
        area_simplified,
        orientation: if area >= 0.0 {
            Orientation::Counterclockwise
        } else {
            Orientation::Clockwise
        },
        ibp_residual: (fdg + gdf).abs(),
        amgm_max_violation: amgm_pointwise_max_violation(&rc),
        amgm_bound,
        wirtinger_bound,
        isoperimetric_bound,
        final_bound_residual: (wirtinger_bound - isoperimetric_bound).abs(),
        arc_constraint_residual: arc_constraint_residual(&rc),
        f_mean,
        parseval_residual: parseval.residual,
        deriv_parseval_residual: (dl - dr).abs(),
        tail_energy,
        truncation_warning,
        wirtinger_slack: df_sq - fc_sq,
        wirtinger_equality: wirtinger.equality_witness.is_some(),
        ratio: 4.0 * PI * abs_area / (length * length),
        deficit: length * length - 4.0 * PI * abs_area,
        simple_probe: is_simple(c, settings.simplicity_samples).simple,
        derivative_probe: derivative_probe(c, 1024),
        chain_ok,
        fourier_order: settings.fourier_order,
        tol,
        warnings,
    })
}

/// `(θ, f, g, f', g')` rows on a uniform grid over `[0, 2π)`.
pub fn plot_samples(rc: &ReparamCurve, count: usize) -> Vec<[f64; 5]> {
    rc.samples(count)
        .into_iter()
        .map(|s| [s.theta, s.f, s.g, s.df, s.dg])
        .collect()
}
