//! The generalized Taylor formula: expand a truncated Mittag-Leffler
//! series, certify the remainder on an interval, and evaluate.
//!
//! Run with: cargo run --example taylor_formula

use locfrac::taylor::{remainder_bound, taylor_polynomial};
use locfrac::{FractalSeries, FractionalOrder};

fn main() -> locfrac::Result<()> {
    let alpha = FractionalOrder::new(0.5)?;
    let f = FractalSeries::mittag_leffler(alpha, 30)?;

    let n = 5;
    let taylor = taylor_polynomial(&f, 0.0, n)?;
    println!("degree-{n} Taylor coefficients of E_1/2 about 0:");
    for (k, &c) in taylor.polynomial.coeffs().iter().enumerate() {
        println!("  c{k} = {c:.15}   (= 1/Gamma(1 + {k}/2))");
    }

    let bound = remainder_bound(&f, 0.0, n, 1.0)?;
    let truth = f.eval(1.0)?;
    let approx = taylor.polynomial.eval(1.0)?;
    println!("\nat x = 1:");
    println!("  f(1)      = {truth:.15}");
    println!("  T_{n}(1)  = {approx:.15}");
    println!("  |error|   = {:.3e}", (truth - approx).abs());
    println!("  certified = {bound:.3e}  (sampled-sup remainder bound on [0,1])");

    // The classical case: degree-4 remainder of exp on [0,1] is e/120.
    let exp_series = FractalSeries::mittag_leffler(FractionalOrder::ONE, 30)?;
    let b4 = remainder_bound(&exp_series, 0.0, 4, 1.0)?;
    println!(
        "\nclassical check: degree-4 bound for exp on [0,1] = {b4:.9} (e/120 = {:.9})",
        std::f64::consts::E / 120.0
    );
    Ok(())
}
