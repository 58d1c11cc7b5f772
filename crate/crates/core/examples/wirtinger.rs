//! Wirtinger's inequality and its equality case.
//!
//! Run with `cargo run --example wirtinger`.

use isoperimetry::spectral::wirtinger_check;
use isoperimetry::trigseries::FourierCoeffs;

fn main() -> isoperimetry::Result<()> {
    let cases = [
        ("cos x", FourierCoeffs::zeros(1).with_cos(1, 1.0)),
        ("3 cos x - 2 sin x", FourierCoeffs::zeros(1).with_cos(1, 3.0).with_sin(1, -2.0)),
        ("cos x + 0.1 sin 3x", FourierCoeffs::zeros(3).with_cos(1, 1.0).with_sin(3, 0.1)),
        ("sin 5x", FourierCoeffs::zeros(5).with_sin(5, 1.0)),
    ];
    println!("{:<20} {:>12} {:>12} {:>12}  witness", "f", "int f^2", "int f'^2", "slack");
    for (label, c) in cases {
        let w = wirtinger_check(&c, 1e-9)?;
        println!(
            "{label:<20} {:>12.6} {:>12.6} {:>12.3e}  {:?}",
            w.int_f_sq, w.int_fprime_sq, w.slack, w.equality_witness
        );
    }

    let shifted = FourierCoeffs::zeros(1).with_a0(1.0).with_cos(1, 1.0);
    match wirtinger_check(&shifted, 1e-9) {
        Err(e) => println!("\nnonzero mean is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
