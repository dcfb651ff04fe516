//! Per-degree convergence of Taylor approximations, printed as the same
//! CSV the `locfrac converge` subcommand emits.
//!
//! Run with: cargo run --example convergence_table

use locfrac::taylor::convergence_table;
use locfrac::{FractalSeries, FractionalOrder};

fn main() -> locfrac::Result<()> {
    let alpha = FractionalOrder::new(0.5)?;
    let f = FractalSeries::mittag_leffler(alpha, 30)?;
    let table = convergence_table(&f, 0.0, 1.0, 12)?;

    println!("E_1/2 at x = 1: reference value {:.15}\n", f.eval(1.0)?);
    print!("{}", table.to_csv());

    let last = table.rows.last().unwrap();
    println!(
        "\nerror at N = {} is {:.3e}, certified by the bound {:.3e}",
        last.degree, last.abs_error, last.remainder_bound
    );
    Ok(())
}
