//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library surface.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The fractional order must satisfy 0 < alpha <= 1.
    #[error("fractional order must lie in (0, 1], got {0}")]
    InvalidOrder(f64),

    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole: {0} is zero or a negative integer")]
    GammaPole(f64),

    /// Gamma overflows f64 above 171; callers should switch to log_gamma.
    #[error("gamma({0}) overflows f64, use log_gamma instead")]
    GammaOverflow(f64),

    /// Argument outside the positive domain required by log_gamma / gamma_ratio.
    #[error("gamma argument must be positive, got {0}")]
    GammaDomain(f64),

    /// Relative tolerance outside (0, 1).
    #[error("relative tolerance must lie in (0, 1), got {0}")]
    InvalidTolerance(f64),

    /// Mittag-Leffler series hit the term cap before the stopping rule fired.
    #[error("Mittag-Leffler series did not converge within {terms} terms")]
    MlNonConvergence { terms: usize },

    /// Mittag-Leffler partial sums left the representable f64 range.
    #[error("Mittag-Leffler partial sums overflowed at term {term}")]
    MlOverflow { term: usize },

    /// A series construction or deserialization was rejected.
    #[error("invalid series: {0}")]
    InvalidSeries(String),

    /// Evaluation (or an integration bound) below the series center.
    #[error("point {x} lies below the series center {center}; the domain is one-sided")]
    BelowCenter { x: f64, center: f64 },

    /// Pairwise operation on series with different alpha or center.
    #[error("series mismatch: {0}")]
    SeriesMismatch(String),

    /// Catch-all precondition failure for numeric routines.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// No sign change of the mean-value residual was found at maximum grid
    /// refinement; the mean value theorem's hypothesis failed numerically.
    #[error("no mean-value point found: residual has no sign change at maximum refinement")]
    MeanValueNotFound,

    /// Quadrature refinement disagreement exceeded the convergence threshold.
    #[error("quadrature did not converge: value {value}, error estimate {error_estimate}")]
    QuadratureNotConverged { value: f64, error_estimate: f64 },

    /// More than half of the Hoelder samples produced a zero increment.
    #[error("degenerate samples: {flat} of {samples} increments are zero (constant function?)")]
    DegenerateSamples { flat: usize, samples: usize },

    /// A user-supplied callable returned a non-finite value.
    #[error("callable returned a non-finite value at t = {at}")]
    CallableFailed { at: f64 },
}
