//! Evaluate the Mittag-Leffler function E_alpha(x^alpha) with its
//! convergence diagnostics, and check the alpha = 1 reduction to exp.
//!
//! Run with: cargo run --example mittag_leffler

use locfrac::special::mittag_leffler;
use locfrac::FractionalOrder;

fn main() -> locfrac::Result<()> {
    println!("E_alpha(x^alpha) = sum_k x^(k alpha) / Gamma(1 + k alpha)\n");
    println!(
        "{:>6} {:>6} {:>22} {:>6} {:>12}",
        "alpha", "x", "value", "terms", "tail bound"
    );
    for &alpha in &[0.3, 0.5, 0.9, 1.0] {
        let order = FractionalOrder::new(alpha)?;
        for &x in &[0.5, 1.0, 2.0] {
            let r = mittag_leffler(order, x, 1e-12)?;
            println!(
                "{:>6} {:>6} {:>22.15} {:>6} {:>12.3e}",
                alpha, x, r.value, r.terms_used, r.tail_bound
            );
        }
    }

    println!("\nalpha = 1 reduces to the exponential:");
    for &x in &[1.0, 5.0, 10.0] {
        let r = mittag_leffler(FractionalOrder::ONE, x, 1e-14)?;
        println!(
            "  E_1({x:>4}) = {:>20.12}   exp({x:>4}) = {:>20.12}   |diff| = {:.2e}",
            r.value,
            x.exp(),
            (r.value - x.exp()).abs()
        );
    }
    Ok(())
}
