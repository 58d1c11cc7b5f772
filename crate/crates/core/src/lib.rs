//! Numerical companion to Hurwitz's Fourier-analytic proof of the planar
//! isoperimetric inequality `4πA ≤ L²`.
//!
//! Every step of the argument is available as an executable check:
//!
//! * [`quadrature`]: periodic trapezoid and Gauss–Legendre engines;
//! * [`trigseries`]: truncated Fourier series, coefficient extraction and
//!   uniform-convergence diagnostics;
//! * [`spectral`]: orthogonality, Parseval and Wirtinger;
//! * [`curve`]: closed curves, arc length and unit-speed reparametrization;
//! * [`isoperimetric`]: shoelace area and the chain
//!   `A = ∫fg' ≤ ½∫(f² + g'²) ≤ ½∫(f'² + g'²) = L²/4π`;
//! * [`cli`]: the command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod curve;
pub mod error;
pub mod isoperimetric;
pub mod quadrature;
pub mod random;
pub mod spectral;
pub mod trigseries;

pub use error::{Error, Result};
