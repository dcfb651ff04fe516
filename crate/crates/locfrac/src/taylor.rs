//! Generalized local fractional Taylor machinery on the spectral operators.
//!
//! `taylor_polynomial` assembles Σ_{k≤N} f^(kα)(x0)/Γ(1+kα) (x−x0)^(kα)
//! from sequential derivatives, `remainder_bound` certifies the error term
//! `sup|f^((N+1)α)| (b−x0)^((N+1)α) / Γ(1+(N+1)α)` on an interval, and
//! `find_xi` / `find_theta` locate the mean-value point of
//! `f(x) − f(x0) = f^(α)(ξ) (x−x0)^α / Γ(1+α)` and its degree-N remainder
//! analogue with `ξ = θx`, `0 < θ < 1`.
//!
//! Root finding is bisection only: residuals are cheap and bisection is
//! robust. When several mean-value points exist the leftmost is returned
//! so that outputs are reproducible.

use crate::error::{Error, Result};
use crate::series::FractalSeries;
use crate::special::{gamma, recip_gamma_pos};
use serde::Serialize;

/// Residual tolerance scale for the mean-value searches.
const MVT_TOL: f64 = 1e-10;

/// Initial scan resolution for sign changes of the mean-value residual.
const SCAN_CELLS: usize = 256;

/// Number of grid doublings tried before giving up the scan.
const SCAN_REFINEMENTS: usize = 3;

/// A Taylor polynomial with its certificate data.
#[derive(Debug, Clone, Serialize)]
pub struct TaylorResult {
    /// Degree-N polynomial centered at the expansion point; coefficient k
    /// is f^(kα)(x0)/Γ(1+kα).
    pub polynomial: FractalSeries,
    /// The degree N.
    pub degree: usize,
    /// Remainder bound on the stated interval. [`taylor_polynomial`]
    /// itself states only the degenerate interval [x0, x0], hence 0;
    /// combine with [`remainder_bound`] for a real interval.
    pub remainder_bound: f64,
    /// Mean-value point, when one was computed.
    pub xi: Option<f64>,
    /// Mean-value ratio θ = (ξ−x0)/(x−x0) ∈ (0, 1), when computed.
    pub theta: Option<f64>,
}

/// One row of a convergence table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConvergenceRow {
    /// Taylor degree for this row.
    #[serde(rename = "N")]
    pub degree: usize,
    /// eval(T_N, x).
    pub approx: f64,
    /// |eval(f, x) − eval(T_N, x)|.
    pub abs_error: f64,
    /// Certified bound for the degree-N remainder on [x0, x].
    pub remainder_bound: f64,
}

/// Per-degree approximation errors against a fixed reference value.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    /// CSV with the fixed header `N,approx,abs_error,remainder_bound` and
    /// 17-significant-digit numbers.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,approx,abs_error,remainder_bound\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{:.16e},{:.16e},{:.16e}\n",
                row.degree, row.approx, row.abs_error, row.remainder_bound
            ));
        }
        out
    }
}

/// Degree-N Taylor polynomial of `f` about `x0 ≥ f.center()`.
///
/// The coefficients come from evaluating the sequential derivatives at
/// x0; with x0 = f.center() (the Mc-Laurin case) a degree-M ≤ N series
/// is reproduced coefficient for coefficient.
pub fn taylor_polynomial(f: &FractalSeries, x0: f64, n: usize) -> Result<TaylorResult> {
    if !(x0 >= f.center()) {
        return Err(Error::BelowCenter {
            x: x0,
            center: f.center(),
        });
    }
    let a = f.alpha().value();
    let mut derivative = f.clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let value = derivative.eval(x0)?;
        if k == 0 {
            coeffs.push(value); // Γ(1) = 1 exactly
        } else {
            coeffs.push(value * recip_gamma_pos(1.0 + k as f64 * a));
        }
        if k < n {
            derivative = derivative.lf_derivative();
        }
    }
    Ok(TaylorResult {
        polynomial: FractalSeries::new(f.alpha(), x0, coeffs)?,
        degree: n,
        remainder_bound: 0.0,
        xi: None,
        theta: None,
    })
}

/// Upper bound for the degree-N remainder of `f` on [x0, b]:
/// `M (b−x0)^((N+1)α) / Γ(1+(N+1)α)` with M the sampled supremum of
/// |f^((N+1)α)| over a 1024-point grid refined once to 2048 points.
///
/// The sampled supremum is exact whenever the derivative magnitude is
/// monotone on the interval (the sup then sits at an endpoint, which the
/// grid contains).
pub fn remainder_bound(f: &FractalSeries, x0: f64, n: usize, b: f64) -> Result<f64> {
    if !(x0 >= f.center()) {
        return Err(Error::BelowCenter {
            x: x0,
            center: f.center(),
        });
    }
    if !(b > x0) {
        return Err(Error::InvalidArgument(format!(
            "interval end {b} must exceed the expansion point {x0}"
        )));
    }
    let derivative = f.sequential_derivative(n + 1);
    let mut sup = 0.0_f64;
    for points in [1024usize, 2048] {
        for i in 0..=points {
            let t = x0 + (b - x0) * i as f64 / points as f64;
            sup = sup.max(derivative.eval(t)?.abs());
        }
    }
    let p = (n as f64 + 1.0) * f.alpha().value();
    Ok(sup * (b - x0).powf(p) * recip_gamma_pos(1.0 + p))
}

/// Scans [lo, hi] for a solution of the residual equation, doubling the
/// grid up to [`SCAN_REFINEMENTS`] times. Walking left to right, an
/// interior node already within the residual tolerance is returned
/// directly (this covers residuals that are identically zero up to
/// rounding, where no sign change exists); otherwise the leftmost
/// sign-change bracket is bisected. The returned point is strictly
/// inside (lo, hi).
fn scan_and_bisect<R>(residual: R, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    R: Fn(f64) -> Result<f64>,
{
    let mut cells = SCAN_CELLS;
    for _ in 0..=SCAN_REFINEMENTS {
        let node = |i: usize| lo + (hi - lo) * i as f64 / cells as f64;
        let mut values = Vec::with_capacity(cells + 1);
        for i in 0..=cells {
            values.push(residual(node(i))?);
        }
        for i in 0..cells {
            if i > 0 && values[i].abs() <= tol {
                return Ok(node(i));
            }
            if values[i] * values[i + 1] < 0.0 {
                return bisect(&residual, node(i), node(i + 1), values[i], tol, hi - lo);
            }
        }
        cells *= 2;
    }
    Err(Error::MeanValueNotFound)
}

fn bisect<R>(
    residual: &R,
    mut lo: f64,
    mut hi: f64,
    mut r_lo: f64,
    tol: f64,
    span: f64,
) -> Result<f64>
where
    R: Fn(f64) -> Result<f64>,
{
    // Besides meeting the residual tolerance, the bracket is narrowed to
    // 1e-12 of the search interval so that equivalent parametrizations
    // (xi versus theta = xi/x) land on the same point.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let r_mid = residual(mid)?;
        if r_mid == 0.0 {
            return Ok(mid);
        }
        if r_mid.abs() <= tol && hi - lo <= 1e-12 * span {
            return Ok(mid);
        }
        if r_mid * r_lo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            r_lo = r_mid;
        }
    }
    Err(Error::MeanValueNotFound)
}

/// Mean-value point ξ ∈ (x0, x) with
/// `f^(α)(ξ) (x−x0)^α / Γ(1+α) = f(x) − f(x0)` up to the residual
/// tolerance `1e-10 (1 + |f(x) − f(x0)|)`.
///
/// Errors with [`Error::MeanValueNotFound`] when no sign change of the
/// residual is detected at maximum grid refinement — the mean value
/// theorem's hypothesis failed numerically for this input.
pub fn find_xi(f: &FractalSeries, x0: f64, x: f64) -> Result<f64> {
    if !(x0 >= f.center()) {
        return Err(Error::BelowCenter {
            x: x0,
            center: f.center(),
        });
    }
    if !(x > x0) {
        return Err(Error::InvalidArgument(format!(
            "x = {x} must exceed x0 = {x0}"
        )));
    }
    let delta = f.eval(x)? - f.eval(x0)?;
    let derivative = f.lf_derivative();
    let a = f.alpha().value();
    let factor = (x - x0).powf(a) / gamma(1.0 + a)?;
    let tol = MVT_TOL * (1.0 + delta.abs());
    scan_and_bisect(|xi| Ok(derivative.eval(xi)? * factor - delta), x0, x, tol)
}

/// Mean-value ratio θ ∈ (0, 1) solving the degree-N remainder equation
/// `f(x) − T_N(x) = f^((N+1)α)(θx) x^((N+1)α) / Γ(1+(N+1)α)` for a
/// series centered at 0. With N = 0 this is `find_xi(f, 0, x) / x`.
pub fn find_theta(f: &FractalSeries, x: f64, n: usize) -> Result<f64> {
    if f.center() != 0.0 {
        return Err(Error::InvalidArgument(format!(
            "find_theta requires a series centered at 0, center is {}",
            f.center()
        )));
    }
    if !(x > 0.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must be positive")));
    }
    let taylor = taylor_polynomial(f, 0.0, n)?;
    let delta = f.eval(x)? - taylor.polynomial.eval(x)?;
    let derivative = f.sequential_derivative(n + 1);
    let p = (n as f64 + 1.0) * f.alpha().value();
    let factor = x.powf(p) * recip_gamma_pos(1.0 + p);
    let tol = MVT_TOL * (1.0 + delta.abs());
    scan_and_bisect(
        |theta| Ok(derivative.eval(theta * x)? * factor - delta),
        0.0,
        1.0,
        tol,
    )
}

/// Rows N = 0..N_max of (approximation, absolute error, remainder bound)
/// at the evaluation point x, with eval(f, x) as the reference value.
pub fn convergence_table(
    f: &FractalSeries,
    x0: f64,
    x: f64,
    n_max: usize,
) -> Result<ConvergenceTable> {
    if n_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "N_max = {n_max} must be at least 1"
        )));
    }
    if !(x > x0) {
        return Err(Error::InvalidArgument(format!(
            "x = {x} must exceed x0 = {x0}"
        )));
    }
    let reference = f.eval(x)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let taylor = taylor_polynomial(f, x0, n)?;
        let approx = taylor.polynomial.eval(x)?;
        let abs_error = (reference - approx).abs();
        let bound = remainder_bound(f, x0, n, x)?;
        if !approx.is_finite() || !abs_error.is_finite() || !bound.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "non-finite convergence row at N = {n}"
            )));
        }
        rows.push(ConvergenceRow {
            degree: n,
            approx,
            abs_error,
            remainder_bound: bound,
        });
    }
    Ok(ConvergenceTable { rows })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen oracle values keep their full published digits
mod tests {
    use super::*;
    use crate::series::FractionalOrder;

    fn order(a: f64) -> FractionalOrder {
        FractionalOrder::new(a).unwrap()
    }

    fn series(a: f64, center: f64, coeffs: &[f64]) -> FractalSeries {
        FractalSeries::new(order(a), center, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn reproduces_own_coefficients() {
        let f = series(0.6, 0.0, &[1.0, -0.5, 0.25, 2.0]);
        let t = taylor_polynomial(&f, 0.0, 6).unwrap();
        assert_eq!(t.polynomial.degree(), 6);
        for k in 0..=6 {
            let expected = f.coeff(k);
            let got = t.polynomial.coeff(k);
            assert!(
                (got - expected).abs() <= 1e-12 * expected.abs().max(1.0),
                "coefficient {k}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn mittag_leffler_mclaurin_coefficients() {
        // E_α(x^α) = 1 + x^α/Γ(1+α) + x^(2α)/Γ(1+2α) + ...
        let f = FractalSeries::mittag_leffler(order(0.5), 12).unwrap();
        let t = taylor_polynomial(&f, 0.0, 8).unwrap();
        for k in 0..=8 {
            let expected = 1.0 / gamma(1.0 + 0.5 * k as f64).unwrap();
            assert!(
                (t.polynomial.coeff(k) - expected).abs() <= 1e-12 * expected,
                "coefficient {k}"
            );
        }
    }

    #[test]
    fn classical_exp_coefficients() {
        let f = FractalSeries::mittag_leffler(order(1.0), 10).unwrap();
        let t = taylor_polynomial(&f, 0.0, 3).unwrap();
        let expected = [1.0, 1.0, 0.5, 1.0 / 6.0];
        for (k, &e) in expected.iter().enumerate() {
            assert!((t.polynomial.coeff(k) - e).abs() <= 1e-12 * e);
        }
    }

    #[test]
    fn remainder_bound_for_exp_is_e_over_120() {
        // sup of e^t on [0,1] is e; degree-4 remainder divides by 5! = 120.
        let f = FractalSeries::mittag_leffler(order(1.0), 30).unwrap();
        let bound = remainder_bound(&f, 0.0, 4, 1.0).unwrap();
        let expected = 2.2652348570492042e-2; // e/120
        assert!(
            (bound - expected).abs() <= 1e-10 * expected,
            "bound = {bound}, expected ~ {expected}"
        );
    }

    #[test]
    fn remainder_bound_vanishes_past_the_degree() {
        let f = series(0.5, 0.0, &[1.0, 2.0, 3.0]);
        assert_eq!(remainder_bound(&f, 0.0, 2, 1.0).unwrap(), 0.0);
        assert_eq!(remainder_bound(&f, 0.0, 7, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn remainder_bound_dominates_true_error() {
        let f = FractalSeries::mittag_leffler(order(0.5), 30).unwrap();
        let n = 5;
        let t = taylor_polynomial(&f, 0.0, n).unwrap();
        let true_err = (f.eval(1.0).unwrap() - t.polynomial.eval(1.0).unwrap()).abs();
        let bound = remainder_bound(&f, 0.0, n, 1.0).unwrap();
        assert!(bound >= true_err, "bound {bound} < true error {true_err}");
    }

    #[test]
    fn find_xi_classical_square() {
        // Mean value point of x² on [0,1] is 1/2.
        let f = series(1.0, 0.0, &[0.0, 0.0, 1.0]);
        let xi = find_xi(&f, 0.0, 1.0).unwrap();
        assert!((xi - 0.5).abs() < 1e-9, "xi = {xi}");
    }

    #[test]
    fn find_xi_fractional_closed_form() {
        // f = x^(2α) at α = 1/2: ξ = x (Γ(1+α)²/Γ(1+2α))^(1/α) = (π/4)².
        let f = series(0.5, 0.0, &[0.0, 0.0, 1.0]);
        let xi = find_xi(&f, 0.0, 1.0).unwrap();
        let expected = 6.1685027506808487e-1;
        assert!((xi - expected).abs() < 1e-8, "xi = {xi}");
        // Substituting ξ back reproduces Δf within the residual contract.
        let delta = f.eval(1.0).unwrap() - f.eval(0.0).unwrap();
        let lhs = f.lf_derivative().eval(xi).unwrap() / gamma(1.5).unwrap();
        assert!((lhs - delta).abs() <= 1e-10 * (1.0 + delta.abs()));
    }

    #[test]
    fn find_xi_residual_contract_and_interior() {
        let f = series(0.5, 0.0, &[0.2, 1.0, 0.3, 0.05]);
        let (x0, x) = (0.0, 2.0);
        let xi = find_xi(&f, x0, x).unwrap();
        assert!(xi > x0 && xi < x);
        let delta = f.eval(x).unwrap() - f.eval(x0).unwrap();
        let factor = (x - x0).powf(0.5) / gamma(1.5).unwrap();
        let residual = f.lf_derivative().eval(xi).unwrap() * factor - delta;
        assert!(residual.abs() <= 1e-10 * (1.0 + delta.abs()));
    }

    #[test]
    fn find_xi_reports_hypothesis_violation() {
        // f = x^α expanded off its center: the spectral derivative is the
        // constant Γ(1+α), so the residual 1 − (√2−1) never crosses zero on
        // (1, 2). The theorem's hypothesis fails for α < 1 away from the
        // fractal point.
        let f = series(0.5, 0.0, &[0.0, 1.0]);
        assert!(matches!(
            find_xi(&f, 1.0, 2.0),
            Err(Error::MeanValueNotFound)
        ));
    }

    #[test]
    fn find_theta_matches_find_xi_at_degree_zero() {
        let f = series(1.0, 0.0, &[0.0, 0.0, 1.0]);
        let theta = find_theta(&f, 1.0, 0).unwrap();
        assert!((theta - 0.5).abs() < 1e-9);

        let g = series(0.5, 0.0, &[0.0, 0.0, 1.0]);
        let theta = find_theta(&g, 1.0, 0).unwrap();
        assert!((theta - 6.1685027506808487e-1).abs() < 1e-8);
        let xi = find_xi(&g, 0.0, 1.0).unwrap();
        assert!((theta - xi / 1.0).abs() < 1e-9);
    }

    #[test]
    fn find_theta_is_strictly_inside_unit_interval() {
        let f = FractalSeries::mittag_leffler(order(0.5), 20).unwrap();
        for n in 0..5 {
            let theta = find_theta(&f, 1.5, n).unwrap();
            assert!(theta > 0.0 && theta < 1.0, "theta = {theta} at N = {n}");
        }
    }

    #[test]
    fn find_theta_requires_center_zero() {
        let f = series(0.5, 1.0, &[1.0, 1.0]);
        assert!(matches!(
            find_theta(&f, 2.0, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn convergence_table_for_exp() {
        let f = FractalSeries::mittag_leffler(order(1.0), 30).unwrap();
        let table = convergence_table(&f, 0.0, 1.0, 8).unwrap();
        assert_eq!(table.rows.len(), 9);
        for pair in table.rows.windows(2) {
            assert!(
                pair[1].abs_error < pair[0].abs_error,
                "errors not decreasing"
            );
        }
        let last = table.rows.last().unwrap();
        assert!(last.abs_error < 1e-4);
        // Frozen oracle: Σ_{k=9}^{30} 1/k! = 3.0586e-6.
        assert!((last.abs_error - 3.0586177753940910e-6).abs() < 1e-12);
        // Every row obeys the theorem's error form.
        for row in &table.rows {
            assert!(row.abs_error <= row.remainder_bound * (1.0 + 1e-9));
        }
    }

    #[test]
    fn convergence_table_exact_past_the_degree() {
        let f = series(0.5, 0.0, &[1.0, -1.0, 0.5]);
        let table = convergence_table(&f, 0.0, 1.0, 5).unwrap();
        for row in table.rows.iter().skip(2) {
            assert!(
                row.abs_error <= 1e-12,
                "N = {}: {}",
                row.degree,
                row.abs_error
            );
        }
    }

    #[test]
    fn convergence_table_csv_shape() {
        let f = series(1.0, 0.0, &[1.0, 1.0]);
        let table = convergence_table(&f, 0.0, 1.0, 1).unwrap();
        let csv = table.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "N,approx,abs_error,remainder_bound");
        assert_eq!(lines.count(), 2);
    }
}
