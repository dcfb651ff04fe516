//! Mean-value points of the fractional mean value theorem:
//! f(x) − f(x0) = f^(alpha)(xi) (x−x0)^alpha / Gamma(1+alpha).
//!
//! Run with: cargo run --example mean_value

use locfrac::special::gamma;
use locfrac::taylor::{find_theta, find_xi};
use locfrac::{FractalSeries, FractionalOrder};

fn main() -> locfrac::Result<()> {
    // f = x^(2 alpha) has the closed-form mean value point
    // xi = x (Gamma(1+a)^2 / Gamma(1+2a))^(1/a).
    println!("f = x^(2a), interval (0, 1):");
    for &a in &[0.3, 0.5, 0.9, 1.0] {
        let alpha = FractionalOrder::new(a)?;
        let f = FractalSeries::basis(alpha, 0.0, 2)?;
        let xi = find_xi(&f, 0.0, 1.0)?;
        let g1 = gamma(1.0 + a)?;
        let g2 = gamma(1.0 + 2.0 * a)?;
        let closed = (g1 * g1 / g2).powf(1.0 / a);
        println!("  alpha = {a:<4}  xi = {xi:.12}  closed form = {closed:.12}");
    }
    println!("  (alpha = 1 is the classical x/2 for the parabola; alpha = 1/2 is (pi/4)^2)");

    // theta parametrizes the same point as a ratio in (0, 1).
    let alpha = FractionalOrder::new(0.5)?;
    let f = FractalSeries::mittag_leffler(alpha, 20)?;
    let x = 1.5;
    println!("\nE_1/2 truncation on (0, {x}):");
    for n in 0..4 {
        let theta = find_theta(&f, x, n)?;
        println!(
            "  degree {n}: theta = {theta:.12} (remainder point xi = {:.12})",
            theta * x
        );
    }
    Ok(())
}
