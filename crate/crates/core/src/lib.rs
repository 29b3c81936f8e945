//! Exact densities of sums of independent random variables and the
//! combinatorial identities they encode.
//!
//! Three families are covered: exponential with distinct rates (the
//! hypoexponential density, a signed mixture of exponential atoms), gamma
//! (a single-kernel series with recursively defined coefficients), and
//! uniform (piecewise polynomials from truncated-power expansions).
//! Moments are computed through independent analytic routes and the
//! resulting identities are checked in exact rational arithmetic, with a
//! seeded Monte Carlo sampler as a statistical cross-check.

pub mod combinatorics;
pub mod densities;
pub mod error;
pub mod identities;
pub mod moments;
pub mod montecarlo;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
