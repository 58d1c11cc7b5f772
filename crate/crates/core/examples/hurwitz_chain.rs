//! Every step of the chain `A ≤ ½∫(f̃² + g'²) ≤ ½∫(f'² + g'²) = L²/4π`.
//!
//! Run with `cargo run --example hurwitz_chain`.

use isoperimetry::curve::CurveSpec;
use isoperimetry::isoperimetric::hurwitz_report;
use isoperimetry::trigseries::FourierCoeffs;

fn main() -> isoperimetry::Result<()> {
    let curves = [
        ("circle(1)", CurveSpec::circle(1.0)?),
        ("ellipse(2, 1)", CurveSpec::ellipse(2.0, 1.0)?),
        (
            "three-lobed",
            CurveSpec::fourier(
                FourierCoeffs::zeros(2).with_cos(1, 1.0).with_cos(2, 0.2),
                FourierCoeffs::zeros(2).with_sin(1, 1.0).with_sin(2, -0.2),
            )?,
        ),
    ];
    for (name, c) in curves {
        let r = hurwitz_report(&c, 32, 1e-10)?;
        println!("{name}");
        println!("  A (shoelace)        {:.12}", r.area_shoelace);
        println!("  A (reparametrized)  {:.12}", r.area_reparam);
        println!("  int f g'            {:.12}", r.area_simplified);
        println!("  am-gm bound         {:.12}", r.amgm_bound);
        println!("  wirtinger bound     {:.12}", r.wirtinger_bound);
        println!("  L^2/4pi             {:.12}", r.isoperimetric_bound);
        println!(
            "  ratio {:.9}  deficit {:.3e}  chain_ok {}  equality {}\n",
            r.ratio, r.deficit, r.chain_ok, r.wirtinger_equality
        );
    }
    Ok(())
}
