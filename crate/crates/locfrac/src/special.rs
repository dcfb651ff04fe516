//! Gamma-function machinery and Mittag-Leffler evaluation.
//!
//! Every coefficient in the fractal power basis carries a `Γ(1 + kα)`
//! factor, so the accuracy of this module bounds everything downstream.
//! `gamma` uses a fixed-coefficient Lanczos approximation (Pugh's
//! coefficients, the same set used by statrs/Boost) good for about 15
//! significant digits on (0.5, 170), with the reflection identity
//! `Γ(z)Γ(1−z) = π / sin(πz)` below 0.5. Coefficient ratios always go
//! through `log_gamma` so that degree ~100 Taylor terms do not overflow.

use crate::error::{Error, Result};
use crate::series::FractionalOrder;
use serde::Serialize;

/// Lanczos parameter r for the Pugh coefficient set below.
const LANCZOS_R: f64 = 10.900511;

/// Lanczos series coefficients ("An Analysis of the Lanczos Gamma
/// Approximation", G. R. Pugh, 2004, p. 116). Stated at full published
/// precision.
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

/// 2·sqrt(e/π), the prefactor of the Lanczos product form.
#[allow(clippy::excessive_precision)]
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657173362492472666631120594218414085755;

/// ln(2·sqrt(e/π)).
#[allow(clippy::excessive_precision)]
const LN_TWO_SQRT_E_OVER_PI: f64 = 0.6207822376352452223455184457816472122518527279025978;

/// Arguments above this overflow f64; callers should use log_gamma instead.
const GAMMA_MAX_ARG: f64 = 171.0;

/// Default term cap for the Mittag-Leffler series.
pub const DEFAULT_TERM_CAP: usize = 10_000;

/// A gamma evaluation bundled with its logarithm.
///
/// The two fields are consistent: `value = exp(log_value)` up to a few
/// ulp of the log magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaValue {
    /// The (positive) argument the pair was evaluated at.
    pub argument: f64,
    /// Γ(argument).
    pub value: f64,
    /// ln Γ(argument).
    pub log_value: f64,
}

/// Result of a truncated Mittag-Leffler evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MittagLefflerValue {
    /// Fractional order of the series.
    pub alpha: FractionalOrder,
    /// Evaluation point (the series argument is x^alpha).
    pub x: f64,
    /// Partial sum at the stopping point.
    pub value: f64,
    /// Number of terms included in the partial sum.
    pub terms_used: usize,
    /// Geometric bound on the omitted tail, valid once the term sequence
    /// is decreasing: first omitted term / (1 - last term ratio).
    pub tail_bound: f64,
}

fn lanczos_sum(x: f64) -> f64 {
    let mut s = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        s += c / (x + i as f64 - 1.0);
    }
    s
}

/// Γ(x) for x not a non-positive integer and x ≤ 171.
///
/// Direct Lanczos product for x ≥ 0.5, reflection below. The power term
/// is split in half near the top of the range so that finite results up
/// to Γ(171) do not overflow in an intermediate.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::GammaDomain(x));
    }
    if x <= 0.0 && x == x.trunc() {
        return Err(Error::GammaPole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::GammaOverflow(x));
    }
    if x < 0.5 {
        // Γ(x) = π / (sin(πx) Γ(1−x)); 1−x ≥ 0.5 so no recursion depth.
        let reflected = gamma(1.0 - x)?;
        return Ok(std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * reflected));
    }
    let s = lanczos_sum(x);
    let base = (x - 0.5 + LANCZOS_R) / std::f64::consts::E;
    let p = x - 0.5;
    if p * base.ln() > 700.0 {
        let half = base.powf(0.5 * p);
        Ok(s * TWO_SQRT_E_OVER_PI * half * half)
    } else {
        Ok(s * TWO_SQRT_E_OVER_PI * base.powf(p))
    }
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::GammaDomain(x));
    }
    if x < 0.5 {
        // log of the reflection identity; sin(πx) > 0 on (0, 0.5).
        let lg = log_gamma(1.0 - x)?;
        return Ok(std::f64::consts::PI.ln() - (std::f64::consts::PI * x).sin().ln() - lg);
    }
    let s = lanczos_sum(x);
    let base = (x - 0.5 + LANCZOS_R) / std::f64::consts::E;
    Ok(s.ln() + LN_TWO_SQRT_E_OVER_PI + (x - 0.5) * base.ln())
}

/// Γ(a)/Γ(b) via exp(log_gamma(a) − log_gamma(b)), for a, b > 0.
///
/// Stays finite for arguments far beyond the overflow point of `gamma`
/// as long as the ratio itself is representable.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    let la = log_gamma(a)?;
    let lb = log_gamma(b)?;
    Ok((la - lb).exp())
}

/// Both Γ(x) and ln Γ(x) for x > 0, as a consistency-checked pair.
pub fn gamma_value(x: f64) -> Result<GammaValue> {
    if !(x > 0.0) {
        return Err(Error::GammaDomain(x));
    }
    Ok(GammaValue {
        argument: x,
        value: gamma(x)?,
        log_value: log_gamma(x)?,
    })
}

/// Internal ratio helper for arguments that are positive by construction.
pub(crate) fn gamma_ratio_pos(a: f64, b: f64) -> f64 {
    debug_assert!(a > 0.0 && b > 0.0);
    gamma_ratio(a, b).expect("gamma_ratio on constructed positive arguments")
}

/// Internal reciprocal 1/Γ(x) for x > 0 by construction; underflows to 0
/// gracefully for very large x.
pub(crate) fn recip_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    (-log_gamma(x).expect("log_gamma on constructed positive argument")).exp()
}

/// E_α(x^α) = Σ_{k≥0} x^{kα} / Γ(1+kα) with the default term cap.
///
/// The partial sum stops once the term sequence has started decreasing
/// and the current term is at most `rel_tol` times the partial sum. For
/// small alpha the terms grow before they decay, so requiring the
/// decreasing phase prevents premature truncation.
pub fn mittag_leffler(alpha: FractionalOrder, x: f64, rel_tol: f64) -> Result<MittagLefflerValue> {
    mittag_leffler_with_cap(alpha, x, rel_tol, DEFAULT_TERM_CAP)
}

/// Same as [`mittag_leffler`] with an explicit term cap.
pub fn mittag_leffler_with_cap(
    alpha: FractionalOrder,
    x: f64,
    rel_tol: f64,
    term_cap: usize,
) -> Result<MittagLefflerValue> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidTolerance(rel_tol));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "Mittag-Leffler argument must be finite and >= 0, got {x}"
        )));
    }
    let a = alpha.value();
    // k-th term as exp(kα ln x − ln Γ(1+kα)); x = 0 contributes only k = 0.
    let term_at = |k: usize| -> f64 {
        if k == 0 {
            return 1.0;
        }
        if x == 0.0 {
            return 0.0;
        }
        let ka = k as f64 * a;
        (ka * x.ln() - log_gamma(1.0 + ka).expect("1 + k alpha > 0")).exp()
    };

    let mut sum = 0.0;
    let mut prev_term = f64::INFINITY;
    let mut decreasing = false;
    for k in 0..term_cap {
        let term = term_at(k);
        if !term.is_finite() {
            return Err(Error::MlOverflow { term: k });
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::MlOverflow { term: k });
        }
        if k >= 1 && term < prev_term {
            decreasing = true;
        }
        if decreasing && term <= rel_tol * sum.abs() {
            let ratio = term / prev_term;
            let next = term_at(k + 1);
            let tail_bound = if ratio < 1.0 {
                next / (1.0 - ratio)
            } else {
                f64::INFINITY
            };
            return Ok(MittagLefflerValue {
                alpha,
                x,
                value: sum,
                terms_used: k + 1,
                tail_bound,
            });
        }
        prev_term = term;
    }
    Err(Error::MlNonConvergence { terms: term_cap })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen oracle values keep their full published digits
mod tests {
    use super::*;

    fn order(a: f64) -> FractionalOrder {
        FractionalOrder::new(a).unwrap()
    }

    const SQRT_PI: f64 = 1.7724538509055160273; // reflection identity at z = 1/2

    #[test]
    fn gamma_trivial_integers() {
        assert!((gamma(1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((gamma(5.0).unwrap() - 24.0).abs() < 24.0 * 1e-14);
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        // Γ(1/2)² = π/sin(π/2) = π, independent of the Lanczos fit.
        let got = gamma(0.5).unwrap();
        assert!((got - SQRT_PI).abs() < 1e-14 * SQRT_PI, "got {got}");
        assert!((got - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn gamma_pole_and_overflow_errors() {
        assert!(matches!(gamma(0.0), Err(Error::GammaPole(_))));
        assert!(matches!(gamma(-3.0), Err(Error::GammaPole(_))));
        assert!(matches!(gamma(172.0), Err(Error::GammaOverflow(_))));
        // Negative non-integers go through reflection.
        let g = gamma(-0.5).unwrap();
        assert!((g - (-2.0 * SQRT_PI)).abs() < 1e-13 * 2.0 * SQRT_PI);
    }

    #[test]
    fn gamma_near_the_top_of_the_range_is_finite() {
        let g = gamma(170.0).unwrap();
        assert!(g.is_finite());
        // Γ(171) = 170 · Γ(170)
        let g1 = gamma(171.0).unwrap();
        assert!(((g1 / g) - 170.0).abs() < 170.0 * 1e-12);
    }

    #[test]
    fn gamma_value_consistency() {
        // value = exp(log_value) to a few ulp of the log magnitude,
        // over the whole working range including the reflection region.
        let mut x = 0.1;
        while x < 170.0 {
            let gv = gamma_value(x).unwrap();
            let from_log = gv.log_value.exp();
            let tol = 8.0 * f64::EPSILON * gv.log_value.abs().max(1.0);
            assert!(
                (gv.value - from_log).abs() <= tol * gv.value.abs(),
                "inconsistent at x = {x}: {} vs {}",
                gv.value,
                from_log
            );
            x *= 1.37;
        }
    }

    #[test]
    fn gamma_recurrence_on_a_grid() {
        // Γ(x+1) = x Γ(x), relative 1e-12 on (0.1, 50).
        for i in 0..1000 {
            let x = 0.1 + 49.8 * (i as f64 + 0.5) / 1000.0;
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-12 * lhs.abs(),
                "recurrence fails at x = {x}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn gamma_ratio_known_values() {
        // Γ(1.5) = sqrt(pi)/2 (half-integer identity), Γ(2) = 1.
        let half = gamma_ratio(1.5, 2.0).unwrap();
        assert!((half - 0.8862269254527580).abs() < 1e-13);
        assert!((half - SQRT_PI / 2.0).abs() < 1e-13);
        assert!((gamma_ratio(3.0, 3.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((gamma_ratio(101.0, 100.0).unwrap() - 100.0).abs() < 100.0 * 1e-13);
        assert!(matches!(gamma_ratio(-1.0, 2.0), Err(Error::GammaDomain(_))));
        assert!(matches!(gamma_ratio(2.0, 0.0), Err(Error::GammaDomain(_))));
    }

    #[test]
    fn gamma_ratio_survives_large_arguments() {
        // Γ(300.5)/Γ(300) = 299.5^... finite even though Γ(300) itself overflows.
        let r = gamma_ratio(301.0, 300.0).unwrap();
        assert!((r - 300.0).abs() < 300.0 * 1e-12);
    }

    #[test]
    fn mittag_leffler_alpha_one_is_exp() {
        let r = mittag_leffler(order(1.0), 1.0, 1e-14).unwrap();
        assert!((r.value - std::f64::consts::E).abs() < 1e-13);
        // Tail-bound check at a tolerance where the mathematical tail
        // dominates the fp rounding of the partial sum itself.
        let loose = mittag_leffler(order(1.0), 1.0, 1e-8).unwrap();
        assert!(loose.tail_bound >= (std::f64::consts::E - loose.value).abs());
        for i in 0..=20 {
            let x = 0.5 * i as f64;
            let r = mittag_leffler(order(1.0), x, 1e-14).unwrap();
            assert!(
                (r.value - x.exp()).abs() <= 1e-10 * x.exp(),
                "E_1({x}) = {} vs exp = {}",
                r.value,
                x.exp()
            );
        }
    }

    #[test]
    fn mittag_leffler_at_zero_is_one() {
        let r = mittag_leffler(order(0.7), 0.0, 1e-14).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.tail_bound, 0.0);
    }

    /// erf by its Maclaurin series: (2/sqrt(pi)) Σ (−1)^n z^(2n+1) / (n! (2n+1)).
    /// Converges fast for |z| ≤ 1; independent of everything in this crate.
    fn erf_oracle(z: f64) -> f64 {
        let mut sum = 0.0;
        let mut n_fact = 1.0;
        for n in 0..40i32 {
            if n > 0 {
                n_fact *= f64::from(n);
            }
            let k = 2 * n + 1;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * z.powi(k) / (n_fact * f64::from(k));
        }
        2.0 / std::f64::consts::PI.sqrt() * sum
    }

    #[test]
    fn mittag_leffler_half_closed_form() {
        // E_{1/2}(z) = e^{z^2} erfc(−z); at z = 1 that is e (1 + erf(1)).
        let oracle = std::f64::consts::E * (1.0 + erf_oracle(1.0));
        assert!(
            (oracle - 5.0089800807622833).abs() < 1e-12,
            "oracle = {oracle:.16}"
        );
        let r = mittag_leffler(order(0.5), 1.0, 1e-12).unwrap();
        assert!(
            (r.value - oracle).abs() <= 1e-10 * oracle,
            "E_{{1/2}}(1) = {} vs oracle {}",
            r.value,
            oracle
        );
    }

    #[test]
    fn mittag_leffler_tail_bound_covers_truth_alpha_half() {
        // Compare a loose truncation against a much tighter one.
        let loose = mittag_leffler(order(0.5), 2.0, 1e-6).unwrap();
        let tight = mittag_leffler(order(0.5), 2.0, 1e-15).unwrap();
        assert!(loose.tail_bound >= (tight.value - loose.value).abs());
    }

    #[test]
    fn mittag_leffler_monotone_in_x() {
        for &a in &[0.3, 0.5, 0.8, 1.0] {
            let mut prev = -1.0;
            for i in 0..=40 {
                let x = 0.25 * i as f64;
                let v = mittag_leffler(order(a), x, 1e-14).unwrap().value;
                assert!(v >= prev, "E_{a}({x}) = {v} < previous {prev}");
                prev = v;
            }
        }
    }

    #[test]
    fn mittag_leffler_error_paths() {
        assert!(matches!(
            mittag_leffler(order(0.5), -1.0, 1e-12),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            mittag_leffler(order(0.5), 1.0, 2.0),
            Err(Error::InvalidTolerance(_))
        ));
        // Huge argument: terms overflow long before the decreasing phase.
        assert!(matches!(
            mittag_leffler(order(0.5), 6000.0, 1e-12),
            Err(Error::MlOverflow { .. })
        ));
        // Tiny cap: the stopping rule cannot fire.
        assert!(matches!(
            mittag_leffler_with_cap(order(0.5), 3.0, 1e-12, 3),
            Err(Error::MlNonConvergence { terms: 3 })
        ));
    }
}
