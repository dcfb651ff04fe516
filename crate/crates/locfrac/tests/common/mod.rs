//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use locfrac::{FractalSeries, FractionalOrder};

/// Small deterministic LCG so test data is reproducible without pulling
/// in an RNG dependency.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() as usize) % (hi - lo + 1)
    }
}

pub fn order(alpha: f64) -> FractionalOrder {
    FractionalOrder::new(alpha).unwrap()
}

/// Random series with coefficients in [lo, hi] and degree in [1, max_degree].
pub fn random_series(
    rng: &mut Lcg,
    alpha: f64,
    center: f64,
    max_degree: usize,
    lo: f64,
    hi: f64,
) -> FractalSeries {
    let degree = rng.usize_in(1, max_degree);
    let coeffs = (0..=degree).map(|_| rng.range(lo, hi)).collect();
    FractalSeries::new(order(alpha), center, coeffs).unwrap()
}

/// erf by its Maclaurin series, (2/sqrt(pi)) Σ (−1)^n z^(2n+1)/(n!(2n+1));
/// independent of everything in the crate under test.
pub fn erf_oracle(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut n_fact = 1.0;
    for n in 0..60usize {
        if n > 0 {
            n_fact *= n as f64;
        }
        let k = (2 * n + 1) as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * z.powi(2 * n as i32 + 1) / (n_fact * k);
    }
    2.0 / std::f64::consts::PI.sqrt() * sum
}

/// Prints the per-criterion verdict line and panics on failure.
pub fn criterion(id: &str, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("acceptance {id} {name}: {verdict} ({detail})");
    assert!(ok, "acceptance criterion {id} ({name}) failed: {detail}");
}
