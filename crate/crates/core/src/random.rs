//! Seeded generators for property runs.
//!
//! Every case draws from its own ChaCha stream keyed by `(seed, index)`, so a
//! failing case can be replayed alone and batch order never affects values.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curve::CurveSpec;
use crate::trigseries::FourierCoeffs;

/// Rejection threshold on the minimum speed of random curves.
pub const MIN_SPEED: f64 = 0.1;

const SPEED_PROBES: usize = 256;
const MAX_ATTEMPTS: usize = 10_000;

/// Independent generator for case `index` of a run seeded with `seed`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Series of the given order with every entry uniform in `[-1, 1]`.
///
/// `a0` is drawn too unless `zero_mean` is set.
pub fn random_coeffs<R: Rng + ?Sized>(rng: &mut R, order: usize, zero_mean: bool) -> FourierCoeffs {
    let a0 = if zero_mean { 0.0 } else { rng.gen_range(-1.0..=1.0) };
    let a = (0..order).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let b = (0..order).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    FourierCoeffs::new(a0, a, b).expect("finite draws")
}

/// Coefficients with `|a_n|, |b_n| ≤ 1/n²` and a random offset in `[-1, 1]`.
fn decaying_coeffs<R: Rng + ?Sized>(rng: &mut R, order: usize) -> FourierCoeffs {
    let bound = |k: usize| 1.0 / ((k + 1) * (k + 1)) as f64;
    let a0 = rng.gen_range(-1.0..=1.0);
    let a = (0..order).map(|k| rng.gen_range(-bound(k)..=bound(k))).collect();
    let b = (0..order).map(|k| rng.gen_range(-bound(k)..=bound(k))).collect();
    FourierCoeffs::new(a0, a, b).expect("finite draws")
}

/// A random regular Fourier curve of order `1..=max_order`.
///
/// Entries decay like `1/n²`; draws whose speed drops below [`MIN_SPEED`] on
/// a 256-point probe grid are rejected and redrawn.
pub fn random_regular_curve<R: Rng + ?Sized>(rng: &mut R, max_order: usize) -> RandomCurve {
    let max_order = max_order.max(1);
    for _ in 0..MAX_ATTEMPTS {
        let order = rng.gen_range(1..=max_order);
        let cx = decaying_coeffs(rng, order);
        let cy = decaying_coeffs(rng, order);
        let Ok(curve) = CurveSpec::fourier(cx.clone(), cy.clone()) else {
            continue;
        };
        let min_speed = curve.probe_params(SPEED_PROBES).map(|t| curve.speed(t)).fold(f64::INFINITY, f64::min);
        if min_speed >= MIN_SPEED {
            return RandomCurve { curve, cx, cy };
        }
    }
    unreachable!("no regular curve in {MAX_ATTEMPTS} draws")
}

#[derive(Debug, Clone)]
pub struct RandomCurve {
    pub curve: CurveSpec,
    pub cx: FourierCoeffs,
    pub cy: FourierCoeffs,
}
