//! Seeded random curves against the isoperimetric inequality, in parallel.
//!
//! Run with `cargo run --release --example random_suite -- [seed] [count]`.

use std::f64::consts::PI;

use rayon::prelude::*;

use isoperimetry::isoperimetric::hurwitz_report;
use isoperimetry::random::{case_rng, random_regular_curve};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().ok());
    let seed = args.next().flatten().unwrap_or(1);
    let count = args.next().flatten().unwrap_or(50);

    let rows: Vec<_> = (0..count)
        .into_par_iter()
        .map(|i| {
            let c = random_regular_curve(&mut case_rng(seed, i), 6).curve;
            (i, hurwitz_report(&c, 32, 1e-10))
        })
        .collect();

    let mut worst = (0, 0.0_f64);
    for (i, r) in rows {
        match r {
            Ok(r) => {
                let holds = 4.0 * PI * r.area_shoelace.abs() <= r.length.powi(2) * (1.0 + 1e-8);
                if !holds || !r.chain_ok {
                    println!("case {i}: violation (ratio {}, chain_ok {})", r.ratio, r.chain_ok);
                }
                if r.ratio > worst.1 {
                    worst = (i, r.ratio);
                }
            }
            Err(e) => println!("case {i}: {e}"),
        }
    }
    println!("seed {seed}: {count} curves, roundest is case {} with ratio {:.9}", worst.0, worst.1);
}
