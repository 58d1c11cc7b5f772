//! Periodic trapezoid vs composite Gauss–Legendre on the ellipse perimeter.
//!
//! Run with `cargo run --example quadrature`.

use isoperimetry::quadrature::{cumulative_integral, integrate_gauss, Interval, PeriodicRule};

fn main() -> isoperimetry::Result<()> {
    let speed = |t: f64| (4.0 * t.sin().powi(2) + t.cos().powi(2)).sqrt();
    let period = Interval::standard_period();

    for min_nodes in [4, 8, 16, 32] {
        let r = PeriodicRule::new(min_nodes, 1e-14)?.integrate(speed, period)?;
        println!(
            "trapezoid from {min_nodes:>2} nodes: {:.16} (converged at {} nodes, last change {:.1e})",
            r.value, r.nodes_used, r.err_estimate
        );
    }
    let g = integrate_gauss(speed, period, 16)?;
    println!("gauss-legendre 16:        {:.16} ({} nodes)", g.value, g.nodes_used);

    println!("\nrunning arc length of ellipse(2, 1):");
    for (t, s) in cumulative_integral(speed, period, 9)? {
        println!("  t = {t:.4}  s = {s:.12}");
    }
    Ok(())
}
