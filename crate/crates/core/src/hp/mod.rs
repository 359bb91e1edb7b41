//! Configurable-precision decimal floating arithmetic and the special
//! functions required by the expansion and resurgence evaluators: complex
//! error function, gamma at integer and half-integer arguments, and an
//! independent series / continued-fraction route to `Q(a, z)`.
//!
//! Precision is counted in significant decimal digits. A [`PrecisionPolicy`]
//! pairs the digits the caller wants with the guard digits carried
//! internally; every operation works at `target + guard` digits.

mod complex;
mod consts;
mod erf;
mod float;
mod funcs;
mod gamma;
mod incgamma;

pub use complex::HpComplex;
pub use consts::{pi, sqrt_2pi};
pub use erf::{erf, erfc};
pub use float::HpFloat;
pub use funcs::{cos_hp, exp_complex, exp_hp, sin_hp};
pub use gamma::{factorial_exact, factorial_hp, gamma_half_int};
pub use incgamma::incomplete_gamma_q;

use core::fmt;

/// Requested decimal precision plus internal guard digits.
///
/// Operations deliver at least `target_digits` reliable significant digits
/// provided cancellation does not eat through the guard digits (in which
/// case the affected operation reports [`HpError::PrecisionInfeasible`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    target_digits: u32,
    guard_digits: u32,
}

impl PrecisionPolicy {
    /// Policy with the default guard of `2·target + 10` digits.
    /// Panics if `target < 10`.
    pub fn new(target_digits: u32) -> Self {
        Self::with_guard(target_digits, 2 * target_digits + 10)
    }

    /// Panics if `target < 10`.
    pub fn with_guard(target_digits: u32, guard_digits: u32) -> Self {
        assert!(
            target_digits >= 10,
            "target precision must be at least 10 digits"
        );
        PrecisionPolicy {
            target_digits,
            guard_digits,
        }
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    /// Total working digits carried by intermediate arithmetic.
    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy::new(60)
    }
}

/// Errors surfaced by the precision-sensitive operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HpError {
    /// Cancellation consumed the guard digits; retry with a larger guard.
    PrecisionInfeasible { lost_digits: u64, guard_digits: u32 },
    /// An iterative evaluation failed to reach tolerance within its cap.
    NonConvergence { iterations: usize },
    /// Input outside the supported domain.
    Domain(&'static str),
}

impl fmt::Display for HpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HpError::PrecisionInfeasible {
                lost_digits,
                guard_digits,
            } => write!(
                f,
                "cancellation lost {} digits, exceeding the {} guard digits; raise the guard",
                lost_digits, guard_digits
            ),
            HpError::NonConvergence { iterations } => {
                write!(f, "no convergence within {} iterations", iterations)
            }
            HpError::Domain(msg) => write!(f, "domain error: {}", msg),
        }
    }
}
