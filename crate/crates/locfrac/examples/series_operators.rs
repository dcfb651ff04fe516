//! The exact operator calculus on fractal power series: derivative,
//! integral, their inverse relation, and the power rule.
//!
//! Run with: cargo run --example series_operators

use locfrac::{FractalSeries, FractionalOrder};

fn show(label: &str, s: &FractalSeries) {
    println!("{label}: {:?}", s.coeffs());
}

fn main() -> locfrac::Result<()> {
    let alpha = FractionalOrder::new(0.5)?;

    // f(x) = 1 + 2 x^(1/2) + x on [0, inf).
    let f = FractalSeries::new(alpha, 0.0, vec![1.0, 2.0, 1.0])?;
    show("f coefficients        ", &f);
    show("derivative            ", &f.lf_derivative());
    show("integral              ", &f.lf_integral());
    show("D(I(f)) (identity)    ", &f.lf_integral().lf_derivative());

    // Power rule: k-fold integral of 1 carries 1/Gamma(1 + k alpha).
    println!("\nk-fold integral of the constant 1:");
    let mut s = FractalSeries::constant(alpha, 0.0, 1.0)?;
    for k in 1..=5 {
        s = s.lf_integral();
        println!("  k = {k}: leading coefficient = {:.15}", s.coeff(k));
    }

    // The basis is closed under multiplication.
    let xa = FractalSeries::basis(alpha, 0.0, 1)?;
    show("\nx^a * x^a             ", &xa.mul(&xa)?);

    // Definite integrals come from the antiderivative.
    let one = FractalSeries::constant(alpha, 0.0, 1.0)?;
    println!(
        "\nintegral of 1 over [0,1] at alpha=1/2: {:.12} (= 1/Gamma(1.5) = 2/sqrt(pi))",
        one.definite_integral(0.0, 1.0)?
    );
    println!(
        "orientation flip: over [1,0] = {:.12}",
        one.definite_integral(1.0, 0.0)?
    );
    Ok(())
}
