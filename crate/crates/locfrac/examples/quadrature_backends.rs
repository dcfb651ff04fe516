//! The grid-based backends against the exact spectral operators: the
//! difference-quotient ladder for the derivative and the singular-kernel
//! quadrature for the integral.
//!
//! Run with: cargo run --example quadrature_backends

use locfrac::numeric::{lfd_quotient, lfi_quadrature};
use locfrac::{FractalSeries, FractionalOrder};

fn main() -> locfrac::Result<()> {
    let alpha = FractionalOrder::new(0.5)?;

    // The quotient anchored at the fractal point of f = x^(1/2) is exactly
    // Gamma(1.5) at every step size.
    let est = lfd_quotient(|t| t.powf(0.5), 0.0, alpha, 1e-2, 8)?;
    println!("difference quotients of x^(1/2) at 0 (alpha = 1/2):");
    for (h, q) in est.h_values.iter().zip(&est.quotients) {
        println!("  h = {h:<10.3e} quotient = {q:.15}");
    }
    println!("  stability (spread of last 3) = {:.2e}", est.stability);

    // Quadrature agrees with the spectral antiderivative.
    let f = FractalSeries::new(alpha, 0.0, vec![0.5, -0.25, 1.5])?;
    let direct = f.definite_integral(0.0, 2.0)?;
    let quad = lfi_quadrature(|t| f.eval(t).unwrap(), 0.0, 2.0, alpha, 4096)?;
    println!("\nintegral of a 3-term series over [0, 2]:");
    println!("  spectral  : {direct:.15}");
    println!(
        "  quadrature: {:.15}  (nodes {}, estimate {:.2e})",
        quad.value, quad.nodes, quad.error_estimate
    );

    // Classical sanity at alpha = 1.
    let classical = lfi_quadrature(|t| t, 0.0, 1.0, FractionalOrder::ONE, 64)?;
    println!(
        "\nclassical: integral of t over [0,1] = {:.15}",
        classical.value
    );
    Ok(())
}
