//! Fourier descriptors of a sampled contour, and the simplicity probe.
//!
//! Run with `cargo run --example polyline_descriptor`.

use std::f64::consts::TAU;

use isoperimetry::curve::{from_polyline, is_simple, perimeter, CurveSpec, SampledCurve};
use isoperimetry::isoperimetric::area_shoelace;
use isoperimetry::trigseries::FourierCoeffs;

fn main() -> isoperimetry::Result<()> {
    // A five-pointed star, 10 vertices with 8 points per edge.
    let vertex = |k: usize| {
        let r = if k.is_multiple_of(2) { 1.0 } else { 0.45 };
        let a = TAU * k as f64 / 10.0 + TAU / 4.0;
        (r * a.cos(), r * a.sin())
    };
    let points: Vec<(f64, f64)> = (0..10)
        .flat_map(|k| {
            let (p, q) = (vertex(k), vertex(k + 1));
            (0..8).map(move |j| {
                let s = j as f64 / 8.0;
                (p.0 + s * (q.0 - p.0), p.1 + s * (q.1 - p.1))
            })
        })
        .collect();
    let sampled = SampledCurve::new(points)?;

    for harmonics in [2, 5, 10, 20, 39] {
        let c = from_polyline(&sampled, harmonics)?;
        println!(
            "{harmonics:>2} harmonics: L = {:.6}, A = {:.6}, simple = {}",
            perimeter(&c)?,
            area_shoelace(&c)?,
            is_simple(&c, 1024).simple
        );
    }
    if let Err(e) = from_polyline(&sampled, 40) {
        println!("40 harmonics: {e}");
    }

    let figure_eight = CurveSpec::fourier(
        FourierCoeffs::zeros(1).with_cos(1, 1.0),
        FourierCoeffs::zeros(2).with_sin(2, 1.0),
    )?;
    let probe = is_simple(&figure_eight, 1024);
    println!("\nfigure eight: simple = {}, crossing near t = {:?}", probe.simple, probe.violation_params);
    Ok(())
}
