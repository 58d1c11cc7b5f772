//! Arc-length reparametrization of an ellipse.
//!
//! Run with `cargo run --example reparametrize`.

use std::f64::consts::TAU;

use isoperimetry::curve::{
    arc_constraint_residual, make_reparam, max_speed_deviation, perimeter, reparametrize_unit_speed,
    CurveSpec, DEFAULT_KNOTS,
};

fn main() -> isoperimetry::Result<()> {
    let ellipse = CurveSpec::ellipse(2.0, 1.0)?;
    let unit = reparametrize_unit_speed(&ellipse, DEFAULT_KNOTS)?;

    println!("perimeter before: {:.15}", perimeter(&ellipse)?);
    println!("perimeter after:  {:.15}", perimeter(&unit)?);
    println!("max |speed - 1|:  {:.2e}", max_speed_deviation(&unit));

    let rc = make_reparam(&unit)?;
    println!("L/2pi = {:.12}, constraint residual {:.2e}\n", rc.scale(), arc_constraint_residual(&rc));
    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "theta", "f", "g", "f'", "g'");
    for k in 0..8 {
        let s = rc.sample(TAU * k as f64 / 8.0);
        println!("{:>8.4} {:>10.6} {:>10.6} {:>10.6} {:>10.6}", s.theta, s.f, s.g, s.df, s.dg);
    }
    Ok(())
}
