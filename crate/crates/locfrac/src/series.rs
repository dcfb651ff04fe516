//! Fractal power series and the local fractional operators acting on them.
//!
//! A [`FractalSeries`] is a finite expansion
//!
//! ```text
//! f(x) = Σ_k c_k (x − x0)^(kα),   k = 0..degree
//! ```
//!
//! in the one-sided basis `(x − x0)^(kα)` for a fractional order
//! `0 < α ≤ 1`. The derivative and integral are exact coefficient maps on
//! this basis:
//!
//! ```text
//! D: c_k ↦ c_k Γ(1+kα)/Γ(1+(k−1)α)   on index k−1   (k = 0 is annihilated)
//! I: c_k ↦ c_k Γ(1+kα)/Γ(1+(k+1)α)   on index k+1   (new index 0 is 0)
//! ```
//!
//! so `D ∘ I` is the identity and `I` applied k times to the constant 1
//! produces the power-rule coefficient `1/Γ(1+kα)`.
//!
//! The domain is one-sided, `x ≥ x0`: real fractional powers of negative
//! bases are undefined, and two-sided variants are out of scope here.

use crate::error::{Error, Result};
use crate::special::{gamma_ratio_pos, recip_gamma_pos};
use serde::{Deserialize, Serialize};

/// Hard degree cap applied when constructing or deserializing a series.
pub const MAX_DEGREE: usize = 512;

/// A validated fractional order α ∈ (0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    /// The classical order α = 1.
    pub const ONE: FractionalOrder = FractionalOrder(1.0);

    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(FractionalOrder(alpha))
        } else {
            Err(Error::InvalidOrder(alpha))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for FractionalOrder {
    type Error = Error;
    fn try_from(alpha: f64) -> Result<Self> {
        FractionalOrder::new(alpha)
    }
}

impl From<FractionalOrder> for f64 {
    fn from(order: FractionalOrder) -> f64 {
        order.0
    }
}

impl std::fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Raw shape of the JSON schema `{"alpha": a, "center": x0, "coeffs": [...]}`.
#[derive(Deserialize)]
struct RawSeries {
    alpha: f64,
    center: f64,
    coeffs: Vec<f64>,
}

/// A finite fractal power series Σ c_k (x − center)^(kα).
///
/// Values are immutable after construction; every operator returns a new
/// series, so sharing across threads is safe.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct FractalSeries {
    alpha: FractionalOrder,
    center: f64,
    coeffs: Vec<f64>,
}

impl TryFrom<RawSeries> for FractalSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        FractalSeries::new(FractionalOrder::new(raw.alpha)?, raw.center, raw.coeffs)
    }
}

impl FractalSeries {
    /// Builds a series from explicit coefficients c_0..c_N.
    ///
    /// Rejects empty or non-finite coefficient lists, non-finite centers,
    /// and degrees beyond [`MAX_DEGREE`].
    pub fn new(alpha: FractionalOrder, center: f64, coeffs: Vec<f64>) -> Result<Self> {
        Self::with_max_degree(alpha, center, coeffs, MAX_DEGREE)
    }

    /// Same as [`FractalSeries::new`] with an explicit degree cap.
    pub fn with_max_degree(
        alpha: FractionalOrder,
        center: f64,
        coeffs: Vec<f64>,
        max_degree: usize,
    ) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("coefficient list is empty".into()));
        }
        if coeffs.len() - 1 > max_degree {
            return Err(Error::InvalidSeries(format!(
                "degree {} exceeds the cap {}",
                coeffs.len() - 1,
                max_degree
            )));
        }
        if !center.is_finite() {
            return Err(Error::InvalidSeries(format!(
                "center {center} is not finite"
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidSeries(format!(
                "coefficient {c} is not finite"
            )));
        }
        Ok(FractalSeries {
            alpha,
            center,
            coeffs,
        })
    }

    /// The zero series (single zero coefficient).
    pub fn zero(alpha: FractionalOrder, center: f64) -> Self {
        FractalSeries {
            alpha,
            center,
            coeffs: vec![0.0],
        }
    }

    /// The constant series c·(x−x0)^0.
    pub fn constant(alpha: FractionalOrder, center: f64, c: f64) -> Result<Self> {
        Self::new(alpha, center, vec![c])
    }

    /// The basis monomial (x − center)^(kα).
    pub fn basis(alpha: FractionalOrder, center: f64, k: usize) -> Result<Self> {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = 1.0;
        Self::new(alpha, center, coeffs)
    }

    /// Truncated Mittag-Leffler series Σ_{k≤degree} x^(kα)/Γ(1+kα),
    /// centered at 0. At α = 1 this is the truncated exponential series.
    pub fn mittag_leffler(alpha: FractionalOrder, degree: usize) -> Result<Self> {
        let a = alpha.value();
        let coeffs = (0..=degree)
            .map(|k| recip_gamma_pos(1.0 + k as f64 * a))
            .collect();
        Self::new(alpha, 0.0, coeffs)
    }

    pub fn alpha(&self) -> FractionalOrder {
        self.alpha
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Index of the last stored coefficient (trailing zeros included).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient c_k, 0 beyond the stored degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Strips trailing exact zeros, keeping at least one coefficient.
    pub fn canonicalized(&self) -> Self {
        let last = self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0);
        FractalSeries {
            alpha: self.alpha,
            center: self.center,
            coeffs: self.coeffs[..=last].to_vec(),
        }
    }

    /// Tolerance-based equality: same alpha and center, and canonicalized
    /// coefficients equal to relative 1e-12 with an absolute floor of
    /// 1e-300. Gamma ratios introduce rounding, so bit equality is the
    /// wrong contract for series coefficients.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.alpha != other.alpha || self.center != other.center {
            return false;
        }
        let a = self.canonicalized();
        let b = other.canonicalized();
        let n = a.coeffs.len().max(b.coeffs.len());
        (0..n).all(|k| {
            let (x, y) = (a.coeff(k), b.coeff(k));
            (x - y).abs() <= (1e-12 * x.abs().max(y.abs())).max(1e-300)
        })
    }

    /// Evaluates the series at x ≥ center.
    ///
    /// Accumulated in increasing k with each power computed as
    /// `exp(kα ln(x−x0))`; at x = x0 only c_0 survives (the k = 0 basis
    /// term at the center is defined as 1).
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x >= self.center) {
            return Err(Error::BelowCenter {
                x,
                center: self.center,
            });
        }
        let u = x - self.center;
        if u == 0.0 {
            return Ok(self.coeffs[0]);
        }
        let ln_u = u.ln();
        let a = self.alpha.value();
        let mut sum = 0.0;
        for (k, &c) in self.coeffs.iter().enumerate() {
            sum += c * (k as f64 * a * ln_u).exp();
        }
        Ok(sum)
    }

    /// Local fractional derivative as the exact coefficient map
    /// c'_{k−1} = c_k Γ(1+kα)/Γ(1+(k−1)α); the constant term is
    /// annihilated and the degree drops by one (a constant maps to the
    /// zero series).
    pub fn lf_derivative(&self) -> Self {
        let a = self.alpha.value();
        if self.coeffs.len() == 1 {
            return Self::zero(self.alpha, self.center);
        }
        // The boundary arguments 1 + mα are spelled identically here and in
        // lf_integral so that a derivative-integral round trip cancels the
        // gamma ratios to ulp level.
        let coeffs = (1..self.coeffs.len())
            .map(|k| self.coeffs[k] * gamma_ratio_pos(1.0 + k as f64 * a, 1.0 + (k - 1) as f64 * a))
            .collect();
        FractalSeries {
            alpha: self.alpha,
            center: self.center,
            coeffs,
        }
    }

    /// Local fractional integral from the center: the coefficient map
    /// c'_{k+1} = c_k Γ(1+kα)/Γ(1+(k+1)α) with c'_0 = 0.
    pub fn lf_integral(&self) -> Self {
        let a = self.alpha.value();
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs.push(c * gamma_ratio_pos(1.0 + k as f64 * a, 1.0 + (k + 1) as f64 * a));
        }
        FractalSeries {
            alpha: self.alpha,
            center: self.center,
            coeffs,
        }
    }

    /// k-fold local fractional derivative; k = 0 is the identity.
    pub fn sequential_derivative(&self, k: usize) -> Self {
        let mut d = self.clone();
        for _ in 0..k {
            d = d.lf_derivative();
        }
        d
    }

    /// Definite integral over [a, b] via the antiderivative g = I f:
    /// g(b) − g(a). Vanishes when a = b and flips sign with orientation.
    pub fn definite_integral(&self, a: f64, b: f64) -> Result<f64> {
        if !(a >= self.center) {
            return Err(Error::BelowCenter {
                x: a,
                center: self.center,
            });
        }
        if !(b >= self.center) {
            return Err(Error::BelowCenter {
                x: b,
                center: self.center,
            });
        }
        let g = self.lf_integral();
        Ok(g.eval(b)? - g.eval(a)?)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alpha != other.alpha {
            return Err(Error::SeriesMismatch(format!(
                "alpha {} vs {}",
                self.alpha, other.alpha
            )));
        }
        if self.center != other.center {
            return Err(Error::SeriesMismatch(format!(
                "center {} vs {}",
                self.center, other.center
            )));
        }
        Ok(())
    }

    /// Coefficientwise sum; requires matching alpha and center.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Ok(FractalSeries {
            alpha: self.alpha,
            center: self.center,
            coeffs,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, lambda: f64) -> Self {
        FractalSeries {
            alpha: self.alpha,
            center: self.center,
            coeffs: self.coeffs.iter().map(|c| c * lambda).collect(),
        }
    }

    /// Cauchy product; the basis is closed under multiplication since
    /// (x−x0)^(jα) (x−x0)^(kα) = (x−x0)^((j+k)α).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(FractalSeries {
            alpha: self.alpha,
            center: self.center,
            coeffs,
        })
    }
}
