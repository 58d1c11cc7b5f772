use thiserror::Error;

/// Errors raised by the numerical engines and the curve pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: lower bound must be below upper bound")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("quadrature did not converge: {nodes} nodes, last refinement changed the value by {err_estimate:e}")]
    NonConvergence { nodes: usize, err_estimate: f64 },

    #[error("integrand returned a non-finite value at x = {at}")]
    NonFinite { at: f64 },

    #[error("integrand is not strictly positive at t = {at} (value {value:e}); the curve is not regular")]
    NonMonotone { at: f64, value: f64 },

    #[error("index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("curve is not closed: endpoint gap {gap:e}")]
    NotClosed { gap: f64 },

    #[error("curve is not periodic: max deviation {deviation:e} over one period")]
    NotPeriodic { deviation: f64 },

    #[error("curve is not regular: speed {speed:e} at t = {at}")]
    NotRegular { at: f64, speed: f64 },

    #[error("polyline needs at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("{harmonics} harmonics requested but {points} points support at most {max}")]
    HarmonicsExceedNyquist {
        harmonics: usize,
        points: usize,
        max: usize,
    },

    #[error("arc-length inversion failed at s = {s}: residual {residual:e}")]
    NewtonStall { s: f64, residual: f64 },

    #[error("curve is not unit-speed: |speed - 1| = {deviation:e} at t = {at}")]
    NotUnitSpeed { at: f64, deviation: f64 },

    #[error("zero-mean hypothesis violated: |a0| = {a0:e} exceeds {tol:e}")]
    ZeroMeanViolated { a0: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
