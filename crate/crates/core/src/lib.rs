//! Exact coefficients and resurgence numerics for the incomplete gamma
//! function in its transition region.
//!
//! The normalised incomplete gamma function `Q(a, z)` changes abruptly where
//! `z ≈ a`. Writing `z = a + τ√a`, it admits an expansion in powers of
//! `a^{-1/2}` whose coefficients `C_n(τ)` are plain polynomials. This crate
//! generates those polynomials (and their companions) in exact rational
//! arithmetic, evaluates the expansion and the inverse-factorial-series
//! approximations of the late coefficients at configurable decimal precision,
//! and provides an independent series/continued-fraction evaluation of
//! `Q(a, z)` for cross-checking.
//!
//! The crate is `no_std`-compatible (requires `alloc`); IO, serialization and
//! the command-line interface live in the companion `transigamma` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod coeffs;
pub mod exact;
pub mod expansion;
pub mod hp;
pub mod resurgence;
pub mod sci;
mod util;

pub use coeffs::CoefficientTable;
pub use exact::{ExactPoly, ExactRational, GaussianRational, Parity};
pub use hp::{HpComplex, HpFloat, PrecisionPolicy};
