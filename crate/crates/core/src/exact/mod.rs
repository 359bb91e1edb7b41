//! Exact arithmetic substrate: arbitrary-precision rationals, Gaussian
//! rationals, dense polynomials over them, and the formal-series exponential.
//!
//! Everything here is exact; no operation ever rounds.

mod poly;
mod rational;
mod scaled;
mod series;

pub use poly::{ExactPoly, Parity};
pub use rational::{ExactRational, GaussianRational, ParseRationalError};
pub use series::{series_exp, series_mul_trunc};

pub(crate) use scaled::{scaled_linear_combination, ScaledPoly};
