//! Closed parametric plane curves.
//!
//! A [`CurveSpec`] carries position and analytic velocity over one parameter
//! period. Curves come from built-in families, from Fourier descriptors, or
//! from a sampled polyline smoothed through a truncated DFT. The arc-length
//! machinery turns any regular curve into a unit-speed one, and
//! [`ReparamCurve`] rescales a unit-speed curve onto `[0, 2π]`.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{cumulative_integral, integrate_gauss, GaussLegendre, Interval};
use crate::trigseries::{eval_deriv_series, eval_series, FourierCoeffs};

pub type Point = (f64, f64);

/// Probe points used by the closure / periodicity / regularity checks.
pub const SHAPE_PROBES: usize = 64;
/// Probe points used by the unit-speed check.
pub const SPEED_PROBES: usize = 256;
/// `make_reparam` accepts curves whose speed is within this of 1.
pub const UNIT_SPEED_TOL: f64 = 1e-5;
/// Target accuracy of [`reparametrize_unit_speed`].
pub const REPARAM_SPEED_TOL: f64 = 1e-6;
/// Required residual of the inverse arc-length solve.
pub const INVERSION_TOL: f64 = 1e-10;
/// Grid used by [`arc_constraint_residual`].
pub const CONSTRAINT_GRID: usize = 512;
/// Default knot count for the arc-length table.
pub const DEFAULT_KNOTS: usize = 1024;

const CLOSURE_TOL: f64 = 1e-10;
const NEWTON_MAX_ITER: usize = 64;
const BISECTION_MAX_ITER: usize = 200;

/// Position and velocity of a parametric curve.
pub trait PlaneCurve: Send + Sync + fmt::Debug {
    fn position(&self, t: f64) -> Point;
    fn velocity(&self, t: f64) -> Point;

    /// Both at once; overridden where they share expensive work.
    fn eval(&self, t: f64) -> (Point, Point) {
        (self.position(t), self.velocity(t))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Circle,
    Ellipse,
    Fourier,
    Polyline,
    ArcLength,
}

/// A closed, regular parametric curve over `[0, period]`.
#[derive(Clone)]
pub struct CurveSpec {
    geometry: Arc<dyn PlaneCurve>,
    period: f64,
    kind: CurveKind,
}

impl fmt::Debug for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CurveSpec")
            .field("kind", &self.kind)
            .field("period", &self.period)
            .field("geometry", &self.geometry)
            .finish()
    }
}

impl CurveSpec {
    /// Wraps a geometry after probing closure, periodicity and regularity.
    pub fn new(geometry: Arc<dyn PlaneCurve>, period: f64, kind: CurveKind) -> Result<Self> {
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::InvalidParams(format!("period must be positive, got {period}")));
        }
        let curve = Self {
            geometry,
            period,
            kind,
        };
        curve.validate()?;
        Ok(curve)
    }

    pub fn circle(r: f64) -> Result<Self> {
        positive("r", r)?;
        Self::new(Arc::new(Circle { r }), TAU * r, CurveKind::Circle)
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        positive("a", a)?;
        positive("b", b)?;
        Self::new(Arc::new(Ellipse { a, b }), TAU, CurveKind::Ellipse)
    }

    /// `x(t) = Σ cx`, `y(t) = Σ cy` over `[0, 2π]`.
    pub fn fourier(cx: FourierCoeffs, cy: FourierCoeffs) -> Result<Self> {
        Self::new(Arc::new(FourierCurve { cx, cy }), TAU, CurveKind::Fourier)
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// Parameter period; equals the perimeter for unit-speed curves.
    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn position(&self, t: f64) -> Point {
        self.geometry.position(t)
    }

    pub fn velocity(&self, t: f64) -> Point {
        self.geometry.velocity(t)
    }

    pub fn eval(&self, t: f64) -> (Point, Point) {
        self.geometry.eval(t)
    }

    pub fn x(&self, t: f64) -> f64 {
        self.position(t).0
    }

    pub fn y(&self, t: f64) -> f64 {
        self.position(t).1
    }

    pub fn dx(&self, t: f64) -> f64 {
        self.velocity(t).0
    }

    pub fn dy(&self, t: f64) -> f64 {
        self.velocity(t).1
    }

    pub fn speed(&self, t: f64) -> f64 {
        let (vx, vy) = self.velocity(t);
        vx.hypot(vy)
    }

    /// Uniform probe parameters `k·period/count`, `k = 0..count`.
    pub fn probe_params(&self, count: usize) -> impl Iterator<Item = f64> + '_ {
        (0..count).map(move |k| self.period * (k as f64 / count as f64))
    }

    /// Closure, periodicity and regularity probes.
    pub fn validate(&self) -> Result<()> {
        let probes: Vec<(Point, Point)> = self.probe_params(SHAPE_PROBES).map(|t| self.eval(t)).collect();
        let mut extent: f64 = 1.0;
        for (k, &((x, y), (vx, vy))) in probes.iter().enumerate() {
            if ![x, y, vx, vy].iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidParams(format!(
                    "curve evaluates to a non-finite value at t = {}",
                    self.period * k as f64 / SHAPE_PROBES as f64
                )));
            }
            extent = extent.max(x.abs()).max(y.abs());
        }
        let tol = CLOSURE_TOL * extent;

        let (p0, pl) = (self.position(0.0), self.position(self.period));
        let gap = (p0.0 - pl.0).abs() + (p0.1 - pl.1).abs();
        if !(gap <= tol) {
            return Err(Error::NotClosed { gap });
        }

        let mut deviation: f64 = 0.0;
        for (t, &(p, _)) in self.probe_params(SHAPE_PROBES).zip(&probes) {
            let q = self.position(t + self.period);
            deviation = deviation.max((p.0 - q.0).abs()).max((p.1 - q.1).abs());
        }
        if !(deviation <= tol) {
            return Err(Error::NotPeriodic { deviation });
        }

        for (t, &(_, (vx, vy))) in self.probe_params(SHAPE_PROBES).zip(&probes) {
            let speed = vx.hypot(vy);
            if !(speed > 0.0) {
                return Err(Error::NotRegular { at: t, speed });
            }
        }
        Ok(())
    }

    /// `λ·γ(t)`, same parameter.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        positive("scale factor", factor)?;
        self.transformed(Transform {
            scale: factor,
            ..Transform::IDENTITY
        })
    }

    /// `γ(t) + (dx, dy)`.
    pub fn translated(&self, dx: f64, dy: f64) -> Result<Self> {
        self.transformed(Transform {
            offset: (dx, dy),
            ..Transform::IDENTITY
        })
    }

    /// `γ(period - t)`: same trace, opposite orientation.
    pub fn reversed(&self) -> Result<Self> {
        self.transformed(Transform {
            reverse: true,
            ..Transform::IDENTITY
        })
    }

    fn transformed(&self, transform: Transform) -> Result<Self> {
        Self::new(
            Arc::new(Transformed {
                base: self.clone(),
                transform,
            }),
            self.period,
            self.kind,
        )
    }

    /// Polygon with `count` vertices at uniform parameters.
    pub fn polygonize(&self, count: usize) -> Vec<Point> {
        self.probe_params(count).map(|t| self.position(t)).collect()
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must be positive, got {v}")))
    }
}

/// Circle of radius `r` at the origin, traversed counterclockwise at unit
/// speed over `[0, 2πr]`.
#[derive(Debug, Clone, Copy)]
struct Circle {
    r: f64,
}

impl PlaneCurve for Circle {
    fn position(&self, t: f64) -> Point {
        let (s, c) = (t / self.r).sin_cos();
        (self.r * c, self.r * s)
    }

    fn velocity(&self, t: f64) -> Point {
        let (s, c) = (t / self.r).sin_cos();
        (-s, c)
    }
}

/// `(a cos t, b sin t)` over `[0, 2π]`.
#[derive(Debug, Clone, Copy)]
struct Ellipse {
    a: f64,
    b: f64,
}

impl PlaneCurve for Ellipse {
    fn position(&self, t: f64) -> Point {
        let (s, c) = t.sin_cos();
        (self.a * c, self.b * s)
    }

    fn velocity(&self, t: f64) -> Point {
        let (s, c) = t.sin_cos();
        (-self.a * s, self.b * c)
    }
}

#[derive(Debug, Clone)]
struct FourierCurve {
    cx: FourierCoeffs,
    cy: FourierCoeffs,
}

impl PlaneCurve for FourierCurve {
    fn position(&self, t: f64) -> Point {
        (eval_series(&self.cx, t), eval_series(&self.cy, t))
    }

    fn velocity(&self, t: f64) -> Point {
        (eval_deriv_series(&self.cx, t), eval_deriv_series(&self.cy, t))
    }
}

#[derive(Debug, Clone, Copy)]
struct Transform {
    scale: f64,
    offset: Point,
    reverse: bool,
}

impl Transform {
    const IDENTITY: Transform = Transform {
        scale: 1.0,
        offset: (0.0, 0.0),
        reverse: false,
    };
}

#[derive(Debug)]
struct Transformed {
    base: CurveSpec,
    transform: Transform,
}

impl Transformed {
    fn param(&self, t: f64) -> f64 {
        if self.transform.reverse {
            self.base.period() - t
        } else {
            t
        }
    }
}

impl PlaneCurve for Transformed {
    fn position(&self, t: f64) -> Point {
        let Transform { scale, offset, .. } = self.transform;
        let (x, y) = self.base.position(self.param(t));
        (scale * x + offset.0, scale * y + offset.1)
    }

    fn velocity(&self, t: f64) -> Point {
        let sign = if self.transform.reverse { -1.0 } else { 1.0 };
        let (vx, vy) = self.base.velocity(self.param(t));
        (sign * self.transform.scale * vx, sign * self.transform.scale * vy)
    }
}

/// Shape descriptor as read from JSON:
/// `{"kind": "circle", "params": {"r": 1}}` and so on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "lowercase")]
pub enum CurveDescriptor {
    Circle {
        r: f64,
    },
    Ellipse {
        a: f64,
        b: f64,
    },
    Fourier {
        cx: FourierCoeffs,
        cy: FourierCoeffs,
    },
    Polyline {
        points: Vec<[f64; 2]>,
        harmonics: usize,
    },
}

/// Builds a curve from a family descriptor.
pub fn make_family(desc: &CurveDescriptor) -> Result<CurveSpec> {
    match desc {
        CurveDescriptor::Circle { r } => CurveSpec::circle(*r),
        CurveDescriptor::Ellipse { a, b } => CurveSpec::ellipse(*a, *b),
        CurveDescriptor::Fourier { cx, cy } => CurveSpec::fourier(cx.clone(), cy.clone()),
        CurveDescriptor::Polyline { points, harmonics } => {
            let sampled = SampledCurve::new(points.iter().map(|p| (p[0], p[1])).collect())?;
            from_polyline(&sampled, *harmonics)
        }
    }
}

/// Implicitly closed polygon: the last point connects back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    points: Vec<Point>,
}

impl SampledCurve {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if points.iter().any(|p| !(p.0.is_finite() && p.1.is_finite())) {
            return Err(Error::InvalidParams("polyline points must be finite".into()));
        }
        let m = points.len();
        if let Some(i) = (0..m).find(|&i| points[i] == points[(i + 1) % m]) {
            return Err(Error::InvalidParams(format!(
                "consecutive polyline points {i} and {} coincide",
                (i + 1) % m
            )));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Fourier-descriptor smoothing of a sampled closed curve.
///
/// Point `k` of `M` is assigned parameter `2πk/M`; the DFT of each coordinate
/// is truncated at `harmonics ≤ ⌊(M-1)/2⌋`, giving a smooth closed curve over
/// `[0, 2π]`.
pub fn from_polyline(s: &SampledCurve, harmonics: usize) -> Result<CurveSpec> {
    let m = s.len();
    if m < 3 {
        return Err(Error::TooFewPoints(m));
    }
    let max = (m - 1) / 2;
    if harmonics == 0 {
        return Err(Error::InvalidParams("harmonics must be positive".into()));
    }
    if harmonics > max {
        return Err(Error::HarmonicsExceedNyquist {
            harmonics,
            points: m,
            max,
        });
    }
    let dft = |coord: fn(&Point) -> f64| {
        let scale = 2.0 / m as f64;
        let a0 = scale * s.points.iter().map(coord).sum::<f64>();
        let mut a = Vec::with_capacity(harmonics);
        let mut b = Vec::with_capacity(harmonics);
        for n in 1..=harmonics {
            let (mut ca, mut cb) = (0.0, 0.0);
            for (k, p) in s.points.iter().enumerate() {
                // Reduce n·k mod M first so the angle stays in [0, 2π).
                let theta = TAU * (((n * k) % m) as f64 / m as f64);
                let (sn, cs) = theta.sin_cos();
                ca += coord(p) * cs;
                cb += coord(p) * sn;
            }
            a.push(scale * ca);
            b.push(scale * cb);
        }
        FourierCoeffs::new(a0, a, b)
    };
    let cx = dft(|p| p.0)?;
    let cy = dft(|p| p.1)?;
    CurveSpec::new(Arc::new(FourierCurve { cx, cy }), TAU, CurveKind::Polyline)
}

/// `∫_a^b |γ'(t)| dt` by composite Gauss–Legendre.
pub fn arc_length(c: &CurveSpec, a: f64, b: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    Ok(integrate_gauss(|t| c.speed(t), Interval::new(a, b)?, 8)?.value)
}

/// Arc length over one full period.
pub fn perimeter(c: &CurveSpec) -> Result<f64> {
    arc_length(c, 0.0, c.period())
}

/// Inverse of the cumulative arc-length map `t ↦ s(t)` of a regular curve.
#[derive(Debug)]
pub struct ArcLengthMap {
    base: CurveSpec,
    ts: Vec<f64>,
    ss: Vec<f64>,
    rule: GaussLegendre,
}

impl ArcLengthMap {
    pub fn new(base: CurveSpec, knots: usize) -> Result<Self> {
        let table = cumulative_integral(|t| base.speed(t), Interval::new(0.0, base.period())?, knots)?;
        let (ts, ss) = table.into_iter().unzip();
        Ok(Self {
            base,
            ts,
            ss,
            rule: GaussLegendre::new(16)?,
        })
    }

    /// Total length of one period.
    pub fn length(&self) -> f64 {
        *self.ss.last().expect("table has at least two rows")
    }

    pub fn base(&self) -> &CurveSpec {
        &self.base
    }

    /// Arc length from the knot `ts[i]` to `t`, single 16-point panel.
    fn partial(&self, i: usize, t: f64) -> f64 {
        let speed = |u: f64| self.base.speed(u);
        match self.rule.panel(&speed, self.ts[i], t) {
            Ok((v, _)) => self.ss[i] + v,
            Err(_) => f64::NAN,
        }
    }

    /// Parameter `t` with `s(t) = s`, extended periodically in `s`.
    ///
    /// Safeguarded Newton inside the bracketing table cell, then bisection if
    /// Newton has not reached [`INVERSION_TOL`].
    pub fn invert(&self, s: f64) -> Result<f64> {
        let total = self.length();
        let period = self.base.period();
        let wraps = (s / total).floor();
        let mut target = s - wraps * total;
        let mut shift = wraps * period;
        if target >= total {
            target -= total;
            shift += period;
        }
        let target = target.max(0.0);

        let cells = self.ts.len() - 1;
        let i = self.ss.partition_point(|&v| v <= target).saturating_sub(1).min(cells - 1);
        let (mut lo, mut hi) = (self.ts[i], self.ts[i + 1]);
        let (s_lo, s_hi) = (self.ss[i], self.ss[i + 1]);
        if target == s_lo {
            return Ok(lo + shift);
        }

        let mut t = lo + (hi - lo) * ((target - s_lo) / (s_hi - s_lo));
        let mut residual = f64::INFINITY;
        for _ in 0..NEWTON_MAX_ITER {
            residual = self.partial(i, t) - target;
            if !residual.is_finite() {
                break;
            }
            if residual > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            if residual.abs() <= 1e-15 * total.max(1.0) {
                break;
            }
            let step = residual / self.base.speed(t);
            let next = t - step;
            let next = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
            if (next - t).abs() <= f64::EPSILON * t.abs().max(1.0) {
                t = next;
                residual = self.partial(i, t) - target;
                break;
            }
            t = next;
        }
        if residual.abs() <= INVERSION_TOL {
            return Ok(t + shift);
        }

        let (mut lo, mut hi) = (self.ts[i], self.ts[i + 1]);
        for _ in 0..BISECTION_MAX_ITER {
            t = 0.5 * (lo + hi);
            residual = self.partial(i, t) - target;
            if residual.abs() <= INVERSION_TOL || hi - lo <= f64::EPSILON * t.abs().max(1.0) {
                break;
            }
            if residual > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
        }
        if residual.abs() <= INVERSION_TOL {
            Ok(t + shift)
        } else {
            Err(Error::NewtonStall { s, residual })
        }
    }
}

#[derive(Debug)]
struct UnitSpeed {
    map: ArcLengthMap,
}

impl PlaneCurve for UnitSpeed {
    fn position(&self, s: f64) -> Point {
        self.eval(s).0
    }

    fn velocity(&self, s: f64) -> Point {
        self.eval(s).1
    }

    fn eval(&self, s: f64) -> (Point, Point) {
        match self.map.invert(s) {
            Ok(t) => {
                let (p, (vx, vy)) = self.map.base.eval(t);
                let speed = vx.hypot(vy);
                (p, (vx / speed, vy / speed))
            }
            Err(_) => ((f64::NAN, f64::NAN), (f64::NAN, f64::NAN)),
        }
    }
}

/// Reparametrizes a regular curve by arc length.
///
/// The output has period equal to the perimeter of `c`, its position is
/// `γ(t(s))` with `t(s)` the inverse arc-length map, and its velocity is
/// `γ'(t(s)) / |γ'(t(s))|`.
pub fn reparametrize_unit_speed(c: &CurveSpec, knots: usize) -> Result<CurveSpec> {
    if knots < 64 {
        return Err(Error::InvalidParams(format!("need at least 64 knots, got {knots}")));
    }
    let map = ArcLengthMap::new(c.clone(), knots)?;
    let length = map.length();
    for k in 0..SPEED_PROBES {
        map.invert(length * (k as f64 / SPEED_PROBES as f64))?;
    }
    let out = CurveSpec::new(Arc::new(UnitSpeed { map }), length, CurveKind::ArcLength)?;
    let deviation = max_speed_deviation(&out);
    if !(deviation <= REPARAM_SPEED_TOL) {
        return Err(Error::NotUnitSpeed {
            at: f64::NAN,
            deviation,
        });
    }
    Ok(out)
}

/// `max |speed - 1|` over [`SPEED_PROBES`] uniform parameters.
pub fn max_speed_deviation(c: &CurveSpec) -> f64 {
    c.probe_params(SPEED_PROBES)
        .map(|t| (c.speed(t) - 1.0).abs())
        .fold(0.0, f64::max)
}

/// Unit-speed curve rescaled onto `[0, 2π]`:
/// `f(θ) = x(Lθ/2π)`, `g(θ) = y(Lθ/2π)`.
#[derive(Debug, Clone)]
pub struct ReparamCurve {
    base: CurveSpec,
    scale: f64,
}

/// `f, g, f', g'` at one `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReparamSample {
    pub theta: f64,
    pub f: f64,
    pub g: f64,
    pub df: f64,
    pub dg: f64,
}

impl ReparamCurve {
    pub fn base(&self) -> &CurveSpec {
        &self.base
    }

    /// Perimeter `L` of the underlying curve.
    pub fn length(&self) -> f64 {
        self.base.period()
    }

    /// Chain-rule factor `L / 2π`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn sample(&self, theta: f64) -> ReparamSample {
        let ((x, y), (vx, vy)) = self.base.eval(self.scale * theta);
        ReparamSample {
            theta,
            f: x,
            g: y,
            df: self.scale * vx,
            dg: self.scale * vy,
        }
    }

    pub fn f(&self, theta: f64) -> f64 {
        self.base.x(self.scale * theta)
    }

    pub fn g(&self, theta: f64) -> f64 {
        self.base.y(self.scale * theta)
    }

    pub fn df(&self, theta: f64) -> f64 {
        self.scale * self.base.dx(self.scale * theta)
    }

    pub fn dg(&self, theta: f64) -> f64 {
        self.scale * self.base.dy(self.scale * theta)
    }

    /// `count` samples on a uniform grid over `[0, 2π)`.
    pub fn samples(&self, count: usize) -> Vec<ReparamSample> {
        (0..count).map(|k| self.sample(TAU * (k as f64 / count as f64))).collect()
    }
}

/// Wraps a unit-speed curve as the pair `(f, g)` on `[0, 2π]`.
pub fn make_reparam(c: &CurveSpec) -> Result<ReparamCurve> {
    for t in c.probe_params(SPEED_PROBES) {
        let deviation = (c.speed(t) - 1.0).abs();
        if !(deviation <= UNIT_SPEED_TOL) {
            return Err(Error::NotUnitSpeed { at: t, deviation });
        }
    }
    Ok(ReparamCurve {
        base: c.clone(),
        scale: c.period() / TAU,
    })
}

/// `max |f'² + g'² - (L/2π)²|` over a [`CONSTRAINT_GRID`]-point grid.
pub fn arc_constraint_residual(rc: &ReparamCurve) -> f64 {
    let target = rc.scale() * rc.scale();
    rc.samples(CONSTRAINT_GRID)
        .iter()
        .map(|s| (s.df * s.df + s.dg * s.dg - target).abs())
        .fold(0.0, f64::max)
}

/// Result of the sampled self-intersection test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimplicityProbe {
    /// No crossing found among non-adjacent polygon edges. Not a proof.
    pub simple: bool,
    /// First crossing edge pair `(i, j)`, edge `i` joining vertex `i` to `i + 1`.
    pub violation: Option<(usize, usize)>,
    /// Curve parameters at the start of the two crossing edges.
    pub violation_params: Option<(f64, f64)>,
}

/// Polygonizes `c` with `samples` vertices (at least 16) and tests every pair
/// of non-adjacent edges for intersection.
pub fn is_simple(c: &CurveSpec, samples: usize) -> SimplicityProbe {
    let n = samples.max(16);
    let poly = c.polygonize(n);
    let edge = |i: usize| (poly[i], poly[(i + 1) % n]);
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (p1, p2) = edge(i);
            let (q1, q2) = edge(j);
            if segments_intersect(p1, p2, q1, q2) {
                let param = |k: usize| c.period() * (k as f64 / n as f64);
                return SimplicityProbe {
                    simple: false,
                    violation: Some((i, j)),
                    violation_params: Some((param(i), param(j))),
                };
            }
        }
    }
    SimplicityProbe {
        simple: true,
        violation: None,
        violation_params: None,
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Closed-segment intersection, touching and collinear overlap included.
pub fn segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Largest discrepancy between the analytic velocity and a central difference
/// of the position, relative to `1 + |γ'|`, over `samples` uniform points.
///
/// Advisory: flags derivative fields that do not match their positions.
pub fn derivative_probe(c: &CurveSpec, samples: usize) -> f64 {
    let h = 1e-5 * c.period() / TAU;
    c.probe_params(samples.max(1))
        .map(|t| {
            let (xp, yp) = c.position(t + h);
            let (xm, ym) = c.position(t - h);
            let (vx, vy) = c.velocity(t);
            let ex = (xp - xm) / (2.0 * h) - vx;
            let ey = (yp - ym) / (2.0 * h) - vy;
            ex.hypot(ey) / (1.0 + vx.hypot(vy))
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    const ELLIPSE_2_1_PERIMETER: f64 = 9.688448220547676;

    fn figure_eight() -> CurveSpec {
        CurveSpec::fourier(
            FourierCoeffs::zeros(0).with_cos(1, 1.0),
            FourierCoeffs::zeros(0).with_sin(2, 1.0),
        )
        .unwrap()
    }

    #[test]
    fn unit_circle_family() {
        let c = CurveSpec::circle(1.0).unwrap();
        assert_eq!(c.period(), TAU);
        for t in c.probe_params(32) {
            assert_abs_diff_eq!(c.x(t), t.cos(), epsilon = 1e-15);
            assert_abs_diff_eq!(c.y(t), t.sin(), epsilon = 1e-15);
            assert_abs_diff_eq!(c.speed(t), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn family_rejects_bad_sizes() {
        assert!(matches!(CurveSpec::circle(0.0), Err(Error::InvalidParams(_))));
        assert!(matches!(CurveSpec::ellipse(1.0, -2.0), Err(Error::InvalidParams(_))));
        assert!(matches!(
            CurveSpec::fourier(FourierCoeffs::zeros(2), FourierCoeffs::zeros(2)),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn ellipse_is_closed_regular_not_unit_speed() {
        let e = CurveSpec::ellipse(2.0, 1.0).unwrap();
        assert!(e.validate().is_ok());
        assert!(max_speed_deviation(&e) > 0.5);
        assert!(matches!(make_reparam(&e), Err(Error::NotUnitSpeed { .. })));
    }

    #[test]
    fn fourier_descriptor_of_circle() {
        let f = CurveSpec::fourier(
            FourierCoeffs::zeros(0).with_cos(1, 1.0),
            FourierCoeffs::zeros(0).with_sin(1, 1.0),
        )
        .unwrap();
        let c = CurveSpec::circle(1.0).unwrap();
        for t in f.probe_params(64) {
            assert_abs_diff_eq!(f.x(t), c.x(t), epsilon = 1e-15);
            assert_abs_diff_eq!(f.y(t), c.y(t), epsilon = 1e-15);
        }
    }

    #[test]
    fn polyline_circle_resamples_to_circle() {
        let pts = (0..256)
            .map(|k| {
                let t = TAU * k as f64 / 256.0;
                (t.cos(), t.sin())
            })
            .collect();
        let curve = from_polyline(&SampledCurve::new(pts).unwrap(), 4).unwrap();
        assert_eq!(curve.kind(), CurveKind::Polyline);
        let circle = CurveSpec::circle(1.0).unwrap();
        for k in 0..1000 {
            let t = TAU * k as f64 / 1000.0;
            let (p, q) = (curve.position(t), circle.position(t));
            assert!((p.0 - q.0).hypot(p.1 - q.1) <= 1e-6);
        }
    }

    #[test]
    fn polyline_square_first_harmonic() {
        let sq = SampledCurve::new(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let c = from_polyline(&sq, 1).unwrap();
        let (p0, p1) = (c.position(0.0), c.position(TAU));
        assert_abs_diff_eq!(p0.0, p1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p0.1, p1.1, epsilon = 1e-15);
        // Centroid of the square, radius √2/2.
        for t in c.probe_params(16) {
            let (x, y) = c.position(t);
            assert_abs_diff_eq!((x - 0.5).hypot(y - 0.5), 0.5f64.sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn polyline_errors() {
        let tri = SampledCurve::new(vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        assert!(matches!(
            from_polyline(&tri, 2),
            Err(Error::HarmonicsExceedNyquist { harmonics: 2, points: 3, max: 1 })
        ));
        assert!(matches!(SampledCurve::new(vec![(0.0, 0.0), (1.0, 0.0)]), Err(Error::TooFewPoints(2))));
        assert!(SampledCurve::new(vec![(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]).is_err());
    }

    #[test]
    fn arc_length_examples() {
        let c1 = CurveSpec::circle(1.0).unwrap();
        assert_abs_diff_eq!(perimeter(&c1).unwrap(), TAU, epsilon = 1e-10);
        let c2 = CurveSpec::circle(2.0).unwrap();
        assert_abs_diff_eq!(arc_length(&c2, 0.0, 4.0 * PI).unwrap(), 4.0 * PI, epsilon = 1e-10);
        let e = CurveSpec::ellipse(2.0, 1.0).unwrap();
        assert_abs_diff_eq!(perimeter(&e).unwrap(), ELLIPSE_2_1_PERIMETER, epsilon = 1e-8);
        assert_eq!(arc_length(&e, 1.0, 1.0).unwrap(), 0.0);
        assert!(arc_length(&e, 2.0, 1.0).is_err());
    }

    #[test]
    fn unit_circle_is_reparam_fixed_point() {
        let c = CurveSpec::circle(1.0).unwrap();
        let u = reparametrize_unit_speed(&c, 256).unwrap();
        assert_abs_diff_eq!(u.period(), TAU, epsilon = 1e-12);
        assert!(max_speed_deviation(&u) <= 1e-10);
        for s in u.probe_params(40) {
            assert_abs_diff_eq!(u.x(s), s.cos(), epsilon = 1e-12);
            assert_abs_diff_eq!(u.y(s), s.sin(), epsilon = 1e-12);
        }
    }

    #[test]
    fn ellipse_reparam_is_unit_speed() {
        let e = CurveSpec::ellipse(2.0, 1.0).unwrap();
        let u = reparametrize_unit_speed(&e, DEFAULT_KNOTS).unwrap();
        assert_abs_diff_eq!(u.period(), ELLIPSE_2_1_PERIMETER, epsilon = 1e-8);
        assert!(max_speed_deviation(&u) <= 1e-6);
        // Periodic extension in s.
        let (p, q) = (u.position(0.3), u.position(0.3 + u.period()));
        assert_abs_diff_eq!(p.0, q.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p.1, q.1, epsilon = 1e-10);
    }

    #[test]
    fn inverse_map_hits_targets() {
        let e = CurveSpec::ellipse(2.0, 1.0).unwrap();
        let map = ArcLengthMap::new(e.clone(), 64).unwrap();
        for k in 0..50 {
            let s = map.length() * k as f64 / 50.0;
            let t = map.invert(s).unwrap();
            let direct = arc_length(&e, 0.0, t).unwrap();
            assert_abs_diff_eq!(direct, s, epsilon = 1e-10);
        }
    }

    #[test]
    fn reparam_rejects_few_knots_and_singular_curves() {
        let c = CurveSpec::circle(1.0).unwrap();
        assert!(reparametrize_unit_speed(&c, 10).is_err());
    }

    #[test]
    fn reparam_of_circles() {
        let c1 = make_reparam(&CurveSpec::circle(1.0).unwrap()).unwrap();
        let c2 = make_reparam(&CurveSpec::circle(2.0).unwrap()).unwrap();
        assert_abs_diff_eq!(c2.scale(), 2.0, epsilon = 1e-15);
        for k in 0..32 {
            let th = TAU * k as f64 / 32.0;
            let s = c1.sample(th);
            assert_abs_diff_eq!(s.f, th.cos(), epsilon = 1e-14);
            assert_abs_diff_eq!(s.g, th.sin(), epsilon = 1e-14);
            assert_abs_diff_eq!(s.df, -th.sin(), epsilon = 1e-14);
            assert_abs_diff_eq!(s.dg, th.cos(), epsilon = 1e-14);
            assert_abs_diff_eq!(c2.f(th), 2.0 * th.cos(), epsilon = 1e-14);
            assert_abs_diff_eq!(c2.df(th), -2.0 * th.sin(), epsilon = 1e-14);
        }
    }

    #[test]
    fn arc_constraint_on_circles() {
        for r in [0.5, 1.0, 3.0] {
            let rc = make_reparam(&CurveSpec::circle(r).unwrap()).unwrap();
            assert!(arc_constraint_residual(&rc) <= 1e-12);
        }
        let rc = make_reparam(&CurveSpec::circle(3.0).unwrap()).unwrap();
        assert_abs_diff_eq!(rc.scale() * rc.scale(), 9.0, epsilon = 1e-14);
    }

    #[test]
    fn arc_constraint_on_reparametrized_ellipse() {
        let e = CurveSpec::ellipse(2.0, 1.0).unwrap();
        let rc = make_reparam(&reparametrize_unit_speed(&e, DEFAULT_KNOTS).unwrap()).unwrap();
        assert!(arc_constraint_residual(&rc) <= 1e-6);
    }

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&CurveSpec::circle(1.0).unwrap(), 256).simple);
        assert!(is_simple(&CurveSpec::ellipse(2.0, 1.0).unwrap(), 256).simple);
        let probe = is_simple(&figure_eight(), 1024);
        assert!(!probe.simple);
        let (ta, tb) = probe.violation_params.unwrap();
        // The lobes cross at the origin, reached at t = π/2 and t = 3π/2.
        assert!((ta - PI / 2.0).abs() < 0.02, "{ta}");
        assert!((tb - 3.0 * PI / 2.0).abs() < 0.02, "{tb}");
    }

    #[test]
    fn segment_predicate() {
        assert!(segments_intersect((0.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, 0.0)));
        assert!(!segments_intersect((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)));
        assert!(segments_intersect((0.0, 0.0), (2.0, 0.0), (1.0, 0.0), (3.0, 0.0)));
        assert!(segments_intersect((0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (1.0, 1.0)));
        assert!(!segments_intersect((0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)));
    }

    #[test]
    fn transforms() {
        let c = CurveSpec::circle(1.0).unwrap();
        let r = c.reversed().unwrap();
        assert_abs_diff_eq!(r.y(0.5), -(0.5f64).sin(), epsilon = 1e-15);
        let s = c.scaled(2.0).unwrap();
        assert_abs_diff_eq!(perimeter(&s).unwrap(), 4.0 * PI, epsilon = 1e-10);
        let t = c.translated(3.0, -1.0).unwrap();
        assert_abs_diff_eq!(t.x(0.0), 4.0, epsilon = 1e-15);
        assert!(derivative_probe(&r, 1024) < 1e-8);
        assert!(derivative_probe(&t, 1024) < 1e-8);
    }

    #[test]
    fn descriptor_json() {
        let d: CurveDescriptor = serde_json::from_str(r#"{"kind": "ellipse", "params": {"a": 2, "b": 1}}"#).unwrap();
        assert_eq!(d, CurveDescriptor::Ellipse { a: 2.0, b: 1.0 });
        let err = serde_json::from_str::<CurveDescriptor>(r#"{"kind": "circle", "params": {"radius": 1}}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("`r`"), "{err}");
        let p: CurveDescriptor = serde_json::from_str(
            r#"{"kind": "polyline", "params": {"points": [[0,0],[1,0],[1,1],[0,1]], "harmonics": 1}}"#,
        )
        .unwrap();
        assert!(make_family(&p).is_ok());
    }
}
