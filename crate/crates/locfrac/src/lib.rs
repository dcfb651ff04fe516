//! Local fractional calculus on fractal power series.
//!
//! The crate represents functions as finite expansions in the one-sided
//! fractal basis `(x − x0)^(kα)` with `0 < α ≤ 1` and builds the whole
//! calculus on exact coefficient maps:
//!
//! * [`series`] — [`FractalSeries`] with the local fractional derivative
//!   and integral, sequential derivatives, definite integrals, and ring
//!   arithmetic on the basis.
//! * [`special`] — gamma / log-gamma / gamma ratios and Mittag-Leffler
//!   evaluation with a certified tail bound.
//! * [`taylor`] — the generalized Taylor polynomial, remainder-bound
//!   certificates, mean-value points ξ and θ, and convergence tables.
//! * [`numeric`] — grid-based backends: the raw difference quotient of
//!   the defining limit, weakly-singular kernel quadrature, a Hoelder
//!   exponent estimator, and the literal partition-sum diagnostic.
//! * [`cli`] — the batch front end behind the `locfrac` binary.
//!
//! Everything is a pure function over immutable values, so any value may
//! be shared or sent across threads freely.
//!
//! ```
//! use locfrac::{FractalSeries, FractionalOrder};
//!
//! let alpha = FractionalOrder::new(0.5).unwrap();
//! // f(x) = x^(1/2), as the basis monomial k = 1.
//! let f = FractalSeries::basis(alpha, 0.0, 1).unwrap();
//! // Its local fractional derivative is the constant Γ(1.5).
//! let d = f.lf_derivative();
//! assert!((d.coeff(0) - 0.8862269254527580).abs() < 1e-13);
//! ```

// Domain guards are written as negated comparisons (`!(x >= y)`) so that
// NaN inputs fail them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod numeric;
pub mod series;
pub mod special;
pub mod taylor;

pub use error::{Error, Result};
pub use series::{FractalSeries, FractionalOrder, MAX_DEGREE};
pub use special::{GammaValue, MittagLefflerValue};
pub use taylor::{ConvergenceRow, ConvergenceTable, TaylorResult};
