//! Integrals of products of sines and cosines over one period.
//!
//! Run with `cargo run --example orthogonality -- [max_order]`.

use isoperimetry::spectral::orthogonality_table;

fn main() -> isoperimetry::Result<()> {
    let max_order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let table = orthogonality_table(max_order, 1e-12)?;

    for e in table.iter().filter(|e| e.n <= 3 && e.m <= 3) {
        println!(
            "{:<8} n={} m={}  computed {:>+.3e}  expected {:.6}",
            e.kind.label(),
            e.n,
            e.m,
            e.computed,
            e.expected
        );
    }
    let worst = table.iter().max_by(|a, b| a.residual.total_cmp(&b.residual)).unwrap();
    println!(
        "\n{} integrals up to order {max_order}; largest residual {:.2e} at {} n={} m={}",
        table.len(),
        worst.residual,
        worst.kind.label(),
        worst.n,
        worst.m
    );
    Ok(())
}
