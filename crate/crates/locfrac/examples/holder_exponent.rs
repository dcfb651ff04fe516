//! Local continuity moduli as log-log slopes: |f(x0+d) − f(x0)| ~ d^a.
//!
//! Run with: cargo run --example holder_exponent

use locfrac::numeric::holder_exponent;

fn main() -> locfrac::Result<()> {
    println!("pure powers t^beta at t = 0:");
    for &beta in &[0.3, 0.5, 0.8, 1.0] {
        let est = holder_exponent(|t: f64| t.powf(beta), 0.0, 1e-6, 1e-2, 32)?;
        println!(
            "  beta = {beta:<4} estimated exponent = {:>8.5}  (r^2 = {:.6})",
            est.exponent, est.r_squared
        );
    }

    // A smooth function has exponent 1 at ordinary points.
    let est = holder_exponent(|t| t * t + 3.0, 1.0, 1e-6, 1e-2, 32)?;
    println!(
        "\nt^2 + 3 at t = 1: exponent = {:.5} (differentiable, so ~1)",
        est.exponent
    );

    // A fractal-basis series is alpha-regular at its center.
    let est = holder_exponent(
        |t: f64| 2.0 * t.powf(0.7) + t.powf(1.4),
        0.0,
        1e-8,
        1e-3,
        48,
    )?;
    println!(
        "2 t^0.7 + t^1.4 at t = 0: exponent = {:.5} (leading power wins)",
        est.exponent
    );
    Ok(())
}
