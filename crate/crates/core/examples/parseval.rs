//! Parseval's identity on a hand-built series and on a seeded random one.
//!
//! Run with `cargo run --example parseval`.

use isoperimetry::random::{case_rng, random_coeffs};
use isoperimetry::spectral::{deriv_parseval_check, parseval_check};
use isoperimetry::trigseries::FourierCoeffs;

fn main() -> isoperimetry::Result<()> {
    // f(x) = 1 + 3 cos x + 4 sin 2x
    let c = FourierCoeffs::zeros(2).with_a0(2.0).with_cos(1, 3.0).with_sin(2, 4.0);
    let p = parseval_check(&c, 1e-12)?;
    println!("(1/pi) int f^2      = {:.15}", p.lhs);
    println!("a0^2/2 + sum a^2+b^2 = {:.15}", p.rhs);
    println!("cross term int a0 S = {:.3e}", p.cross_term);
    println!("int S^2 - pi*sum    = {:.3e}", p.squared_term_residual);

    let (lhs, rhs) = deriv_parseval_check(&c, 1e-12)?;
    println!("derivative: {lhs:.15} vs sum n^2(a^2+b^2) = {rhs}");

    let r = random_coeffs(&mut case_rng(42, 0), 64, false);
    let p = parseval_check(&r, 1e-12)?;
    println!(
        "\nrandom order-64 series: residual {:.2e} using {} nodes",
        p.residual, p.nodes_used
    );
    Ok(())
}
