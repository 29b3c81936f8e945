//! Closed-form densities of sums of independent random variables.
//!
//! - [`hypoexp`]: sums of exponentials with distinct rates, a signed
//!   mixture of exponential atoms with exact rational weights.
//! - [`gamma`]: sums of gamma variables, a single-kernel series whose
//!   coefficients come from a convolution recursion; truncation is
//!   certified by the probability-mass deficit.
//! - [`uniform`]: sums of uniform variables, exact piecewise polynomials
//!   from truncated-power expansions.

pub mod gamma;
pub mod hypoexp;
pub mod uniform;

pub use gamma::{gamma_series, gamma_series_f64, GammaParams, GammaSeries, GammaSeriesF64};
pub use hypoexp::{hypoexp_density, vandermonde_zero, ExpMixDensity, RateParams};
pub use uniform::{
    general_uniform_density, iid_uniform_density, truncated_power_integral, UniformParams,
};
