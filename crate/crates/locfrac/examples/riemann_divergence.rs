//! Why the quadrature backend uses the kernel form: the literal
//! partition-sum limit grows like N^(1−alpha) on uniform partitions for
//! alpha < 1 instead of converging.
//!
//! Run with: cargo run --example riemann_divergence

use locfrac::numeric::riemann_sum_diagnostic;
use locfrac::special::gamma;
use locfrac::FractionalOrder;

fn main() -> locfrac::Result<()> {
    let sizes = [1, 4, 16, 64, 256, 1024, 4096];
    for &a in &[0.5, 0.9, 1.0] {
        let alpha = FractionalOrder::new(a)?;
        println!("alpha = {a}: literal sums of f = 1 over [0, 1]");
        let rows = riemann_sum_diagnostic(|_| 1.0, 0.0, 1.0, alpha, &sizes)?;
        for (n, sum) in rows {
            let law = (n as f64).powf(1.0 - a) / gamma(1.0 + a)?;
            println!("  N = {n:<5} sum = {sum:<22.15} N^(1-a)/Gamma(1+a) = {law:.15}");
        }
        if a < 1.0 {
            println!("  -> diverges like N^(1-alpha); only alpha = 1 converges\n");
        } else {
            println!("  -> classical Riemann sums, exactly 1 for every N\n");
        }
    }
    Ok(())
}
